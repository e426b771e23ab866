#include "specgraph/toughness.hpp"

#include <stdexcept>

#include "combinations.hpp"

namespace specgraph {

Toughness toughness_exact(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0 || !is_connected(g)) throw std::invalid_argument("toughness undefined: graph is not connected");
    if (n > 64) throw std::invalid_argument("exact toughness capped at 64 vertices");

    Toughness t;
    if (is_complete(g)) {
        t.infinite = true;
        return t;
    }

    // plain sweep over all cut sets; strict improvements only, so the
    // witness is the first minimizer in size-then-lex order
    bool have = false;
    for (int s = 1; s <= n - 2; ++s) {
        detail::for_each_combination(n, s, [&](const std::vector<int>& set, std::uint64_t mask) {
            int c = component_count_excluding(g, mask);
            if (c >= 2) {
                Rational val(s, c);
                if (!have || val < t.value) {
                    have = true;
                    t.value = val;
                    t.witness = set;
                    t.witness_components = c;
                }
            }
            return false;
        });
    }
    if (!have) throw std::logic_error("noncomplete connected graph with no cut set");
    return t;
}

bool is_t_tough(const Graph& g, const Rational& t) {
    Toughness tough = toughness_exact(g);
    return tough.infinite || tough.value >= t;
}

WinCondition win_condition(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("win_condition needs k >= 2");
    const int n = g.vertex_count();
    if (n == 0 || !is_connected(g)) throw std::invalid_argument("win_condition needs a connected graph");
    if (n > 64) throw std::invalid_argument("exact win_condition capped at 64 vertices");

    WinCondition out;
    for (int s = 0; s <= n && out.holds; ++s) {
        detail::for_each_combination(n, s, [&](const std::vector<int>& set, std::uint64_t mask) {
            int c = component_count_excluding(g, mask);
            if (c > (k - 2) * s + 2) {
                out.holds = false;
                out.violator = set;
                out.components = c;
                return true;
            }
            return false;
        });
    }
    return out;
}

}  // namespace specgraph
