#include "specgraph/constructions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

namespace specgraph {

namespace {

Graph matching(int t) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t; i += 2) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(t, edges);
}

// unbiased integer in [0, n), deterministic for a fixed engine stream
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    for (;;) {
        std::uint64_t x = rng();
        if (x < limit) return x % n;
    }
}

}  // namespace

Graph matching_complement(int t) {
    if (t < 2 || t % 2 != 0)
        throw std::invalid_argument("matching complement needs an even t >= 2");
    return complement(matching(t));
}

Graph x_graph(int d) {
    if (d < 3) throw std::invalid_argument("x_graph needs d >= 3");
    if (d % 2 == 1) return join(matching_complement(d - 1), complete(2));
    return join(matching_complement(d - 2), complete(3));
}

Graph gadget_4regular() {
    const Graph x4 = x_graph(4);  // degree-3 vertices are 0 and 1
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : x4.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(u + 5, v + 5);
    }
    for (int v : {0, 1, 5, 6}) edges.emplace_back(v, 10);
    return Graph::from_edge_list(11, edges);
}

XFamilyCheck membership_x_family(const Graph& g, int d) {
    if (d < 1) throw std::invalid_argument("membership check needs d >= 1");
    XFamilyCheck c;
    const int n = g.vertex_count();
    if (n == 0) return c;
    c.connected = is_connected(g);
    c.irregular = !regular_degree(g).has_value();
    c.max_degree_is_d = g.max_degree() == d;
    c.order_ok = n >= d + 1;
    c.size_ok = 2L * g.edge_count() >= static_cast<long>(d) * n - d + 1;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == d) ++c.degree_d_count;
    c.degree_d_count_ok = c.degree_d_count >= (d % 2 == 1 ? 2 : 3);
    c.member = c.connected && c.irregular && c.max_degree_is_d && c.order_ok && c.size_ok &&
               c.degree_d_count_ok;
    return c;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::from_edge_list(a + b, edges);
}

Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
    }
    return Graph::from_edge_list(10, edges);
}

Graph hypercube(int dim) {
    if (dim < 0 || dim > 9) throw std::invalid_argument("hypercube dimension out of range 0..9");
    int n = 1 << dim;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dim; ++b)
            if (!(v >> b & 1)) edges.emplace_back(v, v | 1 << b);
    return Graph::from_edge_list(n, edges);
}

Graph star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star needs a nonnegative leaf count");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edge_list(leaves + 1, edges);
}

Graph named_graph(const std::string& name, const std::vector<int>& params) {
    auto arity = [&](std::size_t want) {
        if (params.size() != want)
            throw std::invalid_argument("graph \"" + name + "\" takes " + std::to_string(want) +
                                        " parameter(s)");
    };
    if (name == "cycle") { arity(1); return cycle(params[0]); }
    if (name == "path") { arity(1); return path_graph(params[0]); }
    if (name == "complete") { arity(1); return complete(params[0]); }
    if (name == "complete-bipartite") { arity(2); return complete_bipartite(params[0], params[1]); }
    if (name == "petersen") { arity(0); return petersen(); }
    if (name == "hypercube") { arity(1); return hypercube(params[0]); }
    if (name == "star") { arity(1); return star(params[0]); }
    throw std::invalid_argument("unknown graph name: " + name);
}

Graph random_regular(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0 || d >= n) throw std::invalid_argument("random_regular needs 0 <= d < n");
    if (n % 2 != 0 && d % 2 != 0)
        throw std::invalid_argument("random_regular: nd must be even");

    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs[static_cast<std::size_t>(v) * d + i] = v;

    // pairing model with full rejection keeps the distribution uniform over
    // simple d-regular graphs
    for (int attempt = 0; attempt < 10000; ++attempt) {
        for (std::size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[uniform_below(rng, i)]);
        Graph g = Graph::edgeless(n);
        std::vector<std::pair<int, int>> edges;
        edges.reserve(stubs.size() / 2);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            edges.emplace_back(u, v);
        }
        if (!ok) continue;
        g = Graph::from_edge_list(n, edges);
        if (2 * g.edge_count() == static_cast<long>(n) * d) return g;  // no duplicate pair
    }
    throw std::runtime_error("random_regular: rejection cap reached (10000 attempts)");
}

void enumerate_connected_regular(int n, int d,
                                 const std::function<void(const Graph&)>& visit) {
    if (n < 1 || d < 0 || d >= n)
        throw std::invalid_argument("enumerate_connected_regular needs 0 <= d < n");
    if (static_cast<long>(n) * d % 2 != 0) return;  // no graphs at all

    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg(n, 0);

    // decide each pair (i, j) in lexicographic order; a row must close at
    // exactly degree d, and skipping an edge is only allowed while enough
    // undecided pairs remain
    auto rec = [&](auto&& self, int i, int j) -> void {
        if (i == n - 1) {
            if (deg[n - 1] == d) {
                Graph g = Graph::from_edge_list(n, edges);
                if (is_connected(g)) visit(g);
            }
            return;
        }
        if (j == n) {
            if (deg[i] == d) self(self, i + 1, i + 2);
            return;
        }
        if (deg[i] < d && deg[j] < d) {
            ++deg[i];
            ++deg[j];
            edges.emplace_back(i, j);
            self(self, i, j + 1);
            edges.pop_back();
            --deg[i];
            --deg[j];
        }
        if (deg[i] + (n - 1 - j) >= d && deg[j] + (n - 2 - i) >= d) self(self, i, j + 1);
    };
    if (n == 1) {
        if (d == 0) visit(Graph::edgeless(1));
        return;
    }
    rec(rec, 0, 1);
}

std::uint64_t count_connected_regular(int n, int d) {
    std::uint64_t count = 0;
    enumerate_connected_regular(n, d, [&](const Graph&) { ++count; });
    return count;
}

}  // namespace specgraph
