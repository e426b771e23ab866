#include "specgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

namespace specgraph {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

void Graph::set_edge(int u, int v) {
    std::uint64_t& a = bits_[static_cast<std::size_t>(u) * words_ + (static_cast<unsigned>(v) >> 6)];
    std::uint64_t bit = std::uint64_t{1} << (v & 63);
    if (a & bit) return;  // duplicate
    a |= bit;
    bits_[static_cast<std::size_t>(v) * words_ + (static_cast<unsigned>(u) >> 6)] |=
        std::uint64_t{1} << (u & 63);
    ++deg_[u];
    ++deg_[v];
    ++m_;
}

Graph Graph::edgeless(int n) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    Graph g;
    g.n_ = n;
    g.words_ = std::max(1, (n + 63) / 64);
    g.bits_.assign(static_cast<std::size_t>(n) * g.words_, 0);
    g.deg_.assign(n, 0);
    return g;
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g = edgeless(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + pair_str(u, v));
        if (u == v) throw std::invalid_argument("loop rejected: " + pair_str(u, v));
        g.set_edge(u, v);
    }
    return g;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(deg_[v]);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = bits_[static_cast<std::size_t>(v) * words_ + w];
        while (bits) {
            out.push_back(w * 64 + std::countr_zero(bits));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::min_degree() const {
    if (n_ == 0) throw std::invalid_argument("min_degree of an empty graph");
    return *std::min_element(deg_.begin(), deg_.end());
}

int Graph::max_degree() const {
    if (n_ == 0) throw std::invalid_argument("max_degree of an empty graph");
    return *std::max_element(deg_.begin(), deg_.end());
}

ComponentLabeling components(const Graph& g) {
    const int n = g.vertex_count();
    ComponentLabeling out;
    out.label.assign(n, -1);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (out.label[root] != -1) continue;
        int id = out.count++;
        out.label[root] = id;
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (out.label[w] == -1) {
                    out.label[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).count == 1; }

bool is_complete(const Graph& g) {
    long n = g.vertex_count();
    return 2L * g.edge_count() == n * (n - 1);
}

std::optional<int> regular_degree(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    int d = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> color(n, -1);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        stack.push_back(root);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = color[v] ^ 1;
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    VertexSet a, b;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? a : b).push_back(v);
    return std::make_pair(std::move(a), std::move(b));
}

SubgraphResult induced_subgraph(const Graph& g, const VertexSet& keep) {
    const int n = g.vertex_count();
    std::vector<char> in(n, 0);
    for (int v : keep) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
        in[v] = 1;
    }
    SubgraphResult out;
    out.old_to_new.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        if (!in[v]) continue;
        out.old_to_new[v] = static_cast<int>(out.new_to_old.size());
        out.new_to_old.push_back(v);
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) {
        if (!in[v]) continue;
        for (int w : g.neighbors(v))
            if (v < w && in[w]) edges.emplace_back(out.old_to_new[v], out.old_to_new[w]);
    }
    out.graph = Graph::from_edge_list(static_cast<int>(out.new_to_old.size()), edges);
    return out;
}

SubgraphResult delete_vertices(const Graph& g, const VertexSet& drop) {
    const int n = g.vertex_count();
    std::vector<char> gone(n, 0);
    for (int v : drop) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
        gone[v] = 1;
    }
    VertexSet keep;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count();
    const int nh = h.vertex_count();
    std::vector<std::pair<int, int>> edges = g.edges();
    for (const auto& [u, v] : h.edges()) edges.emplace_back(u + ng, v + ng);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) edges.emplace_back(u, ng + v);
    return Graph::from_edge_list(ng + nh, edges);
}

std::uint64_t vertex_mask(const VertexSet& s, int n) {
    if (n > 64) throw std::invalid_argument("vertex_mask needs n <= 64");
    std::uint64_t mask = 0;
    for (int v : s) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
        mask |= std::uint64_t{1} << v;
    }
    return mask;
}

int component_count_excluding(const Graph& g, std::uint64_t removed) {
    const int n = g.vertex_count();
    assert(n <= 64);
    std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t rem = all & ~removed;
    int count = 0;
    while (rem) {
        std::uint64_t comp = rem & (~rem + 1);
        std::uint64_t grow = comp;
        while (grow) {
            int v = std::countr_zero(grow);
            grow &= grow - 1;
            std::uint64_t fresh = g.neighbor_mask(v) & rem & ~comp;
            comp |= fresh;
            grow |= fresh;
        }
        rem &= ~comp;
        ++count;
    }
    return count;
}

}  // namespace specgraph
