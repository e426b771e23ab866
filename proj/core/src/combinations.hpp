#pragma once

#include <cstdint>
#include <vector>

namespace specgraph::detail {

// Visits every size-s subset of {0..n-1} in lexicographic order of the
// sorted element list, passing the elements and their bit mask. fn returns
// true to stop early; the function reports whether it was stopped.
template <class Fn>
bool for_each_combination(int n, int s, Fn&& fn) {
    if (s < 0 || s > n) return false;
    std::vector<int> c(s);
    for (int i = 0; i < s; ++i) c[i] = i;
    std::uint64_t mask = 0;
    if (n <= 64)
        for (int i = 0; i < s; ++i) mask |= std::uint64_t{1} << i;
    for (;;) {
        if (fn(static_cast<const std::vector<int>&>(c), mask)) return true;
        // advance the odometer: rightmost digit that can move
        int i = s - 1;
        while (i >= 0 && c[i] == n - s + i) --i;
        if (i < 0) return false;
        if (n <= 64) mask &= ~(std::uint64_t{1} << c[i]);
        ++c[i];
        if (n <= 64) mask |= std::uint64_t{1} << c[i];
        for (int j = i + 1; j < s; ++j) {
            if (n <= 64) mask &= ~(std::uint64_t{1} << c[j]);
            c[j] = c[j - 1] + 1;
            if (n <= 64) mask |= std::uint64_t{1} << c[j];
        }
    }
}

}  // namespace specgraph::detail
