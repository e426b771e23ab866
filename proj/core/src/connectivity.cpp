#include "specgraph/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <string>

#include "combinations.hpp"

namespace specgraph {

namespace {

// Dense unit-capacity network; big enough for split-vertex graphs at desk
// scale. BFS augmentation, one path per round.
struct FlowNet {
    int size = 0;
    std::vector<int> cap;  // size*size residual capacities

    explicit FlowNet(int n) : size(n), cap(static_cast<std::size_t>(n) * n, 0) {}
    int& at(int u, int v) { return cap[static_cast<std::size_t>(u) * size + v]; }

    int max_flow(int s, int t) {
        int flow = 0;
        std::vector<int> parent(size);
        for (;;) {
            std::fill(parent.begin(), parent.end(), -1);
            parent[s] = s;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && parent[t] == -1) {
                int u = q.front();
                q.pop();
                for (int v = 0; v < size; ++v) {
                    if (parent[v] == -1 && at(u, v) > 0) {
                        parent[v] = u;
                        q.push(v);
                    }
                }
            }
            if (parent[t] == -1) return flow;
            for (int v = t; v != s; v = parent[v]) {
                --at(parent[v], v);
                ++at(v, parent[v]);
            }
            ++flow;
        }
    }
};

void check_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument(std::string(what) + " out of range: " + std::to_string(v));
}

}  // namespace

int max_flow_unit(const Graph& g, int source, int sink, bool vertex_capacities) {
    check_vertex(g, source, "source");
    check_vertex(g, sink, "sink");
    if (source == sink) throw std::invalid_argument("source equals sink");
    const int n = g.vertex_count();

    if (!vertex_capacities) {
        FlowNet net(n);
        for (const auto& [u, v] : g.edges()) {
            net.at(u, v) = 1;
            net.at(v, u) = 1;
        }
        return net.max_flow(source, sink);
    }

    // vertex splitting: v_in = v, v_out = v + n; interior capacity 1
    FlowNet net(2 * n);
    for (int v = 0; v < n; ++v) net.at(v, v + n) = v == source || v == sink ? n : 1;
    for (const auto& [u, v] : g.edges()) {
        net.at(u + n, v) = 1;
        net.at(v + n, u) = 1;
    }
    return net.max_flow(source + n, sink);
}

int edge_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("edge connectivity needs n >= 2");
    int best = n;  // above any possible cut
    for (int u = 1; u < n; ++u) {
        best = std::min(best, max_flow_unit(g, 0, u, false));
        if (best == 0) break;
    }
    return best;
}

int vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("vertex connectivity needs n >= 2");
    if (is_complete(g)) return n - 1;
    int best = n;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.adjacent(u, v)) continue;
            best = std::min(best, max_flow_unit(g, u, v, true));
            if (best == 0) return 0;
        }
    }
    return best;
}

LConnectivity l_connectivity(const Graph& g, int l) {
    if (l < 2) throw std::invalid_argument("l_connectivity needs l >= 2");
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("l_connectivity of an empty graph");
    if (n > 64) throw std::invalid_argument("exact l_connectivity capped at 64 vertices");

    if (components(g).count >= l || n <= l - 1) return {0, {}};

    for (int s = 1; s <= n - l + 1; ++s) {
        LConnectivity found;
        bool hit = detail::for_each_combination(n, s, [&](const std::vector<int>& set,
                                                          std::uint64_t mask) {
            if (n - s <= l - 1 || component_count_excluding(g, mask) >= l) {
                found = {s, set};
                return true;
            }
            return false;
        });
        if (hit) return found;
    }
    // |S| = n-l+1 always qualifies via the vertex-count branch
    throw std::logic_error("l_connectivity search fell through");
}

int independence_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("exact independence number capped at 64 vertices");
    if (n == 0) return 0;
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    int best = 0;
    // branch on the highest-degree vertex of the residual graph: either it
    // is excluded, or it is taken and its closed neighborhood leaves
    auto rec = [&](auto&& self, std::uint64_t mask, int have) -> void {
        if (have + std::popcount(mask) <= best) return;
        if (mask == 0) {
            best = std::max(best, have);
            return;
        }
        int pick = -1, pick_deg = -1;
        for (std::uint64_t scan = mask; scan;) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int deg = std::popcount(g.neighbor_mask(v) & mask);
            if (deg > pick_deg) {
                pick = v;
                pick_deg = deg;
            }
        }
        if (pick_deg == 0) {
            best = std::max(best, have + std::popcount(mask));
            return;
        }
        self(self, mask & ~(g.neighbor_mask(pick) | (std::uint64_t{1} << pick)), have + 1);
        self(self, mask & ~(std::uint64_t{1} << pick), have);
    };
    rec(rec, all, 0);
    return best;
}

ConnectivityProfile connectivity_profile(const Graph& g, const std::vector<int>& ls) {
    ConnectivityProfile p;
    p.kappa = vertex_connectivity(g);
    p.kappa_prime = edge_connectivity(g);
    p.alpha = independence_number(g);
    for (int l : ls) p.kappa_l[l] = l_connectivity(g, l);
    return p;
}

}  // namespace specgraph
