#include "specgraph/ktree.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <stdexcept>

namespace specgraph {

KTreeWitness has_spanning_k_tree(const Graph& g, int k) {
    if (k < 2) throw std::invalid_argument("spanning k-tree search needs k >= 2");
    const int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("exact spanning tree search capped at 64 vertices");

    KTreeWitness w;
    if (n == 0 || !is_connected(g)) return w;
    if (n == 1) {
        w.exists = true;
        return w;
    }

    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> forbidden(n, 0);  // edges branched out of the tree
    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> edges;
    std::uint64_t in_tree = 1;  // grow from vertex 0

    // Edges an outside vertex can still attach through: not forbidden, and
    // any tree endpoint must have spare degree.
    auto usable = [&](int v) {
        std::uint64_t nb = g.neighbor_mask(v) & ~forbidden[v];
        std::uint64_t ok = nb & ~in_tree;
        for (std::uint64_t tn = nb & in_tree; tn;) {
            int u = std::countr_zero(tn);
            tn &= tn - 1;
            if (deg[u] < k) ok |= std::uint64_t{1} << u;
        }
        return ok;
    };

    // Branch on one frontier edge being in or out of the tree; picking the
    // most constrained outside vertex keeps dead ends shallow.
    auto rec = [&](auto&& self) -> bool {
        if (in_tree == all) return true;
        int pick_u = -1, pick_v = -1, fewest = INT_MAX;
        for (std::uint64_t out = all & ~in_tree; out;) {
            int v = std::countr_zero(out);
            out &= out - 1;
            std::uint64_t us = usable(v);
            if (us == 0) return false;  // v can no longer join any tree
            std::uint64_t tree_side = us & in_tree;
            if (tree_side == 0) continue;
            int cnt = std::popcount(us);
            if (cnt < fewest) {
                fewest = cnt;
                pick_v = v;
                pick_u = std::countr_zero(tree_side);
            }
        }
        if (pick_v < 0) return false;  // frontier exhausted

        in_tree |= std::uint64_t{1} << pick_v;
        ++deg[pick_u];
        ++deg[pick_v];
        edges.emplace_back(pick_u, pick_v);
        if (self(self)) return true;
        edges.pop_back();
        --deg[pick_u];
        --deg[pick_v];
        in_tree &= ~(std::uint64_t{1} << pick_v);

        forbidden[pick_u] |= std::uint64_t{1} << pick_v;
        forbidden[pick_v] |= std::uint64_t{1} << pick_u;
        bool found = self(self);
        forbidden[pick_u] &= ~(std::uint64_t{1} << pick_v);
        forbidden[pick_v] &= ~(std::uint64_t{1} << pick_u);
        return found;
    };

    if (!rec(rec)) return w;

    w.exists = true;
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    w.tree_edges = std::move(edges);
    for (int v = 0; v < n; ++v) w.max_degree = std::max(w.max_degree, deg[v]);
    return w;
}

}  // namespace specgraph
