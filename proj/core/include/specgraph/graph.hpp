#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace specgraph {

// A set of vertex ids. Functions that return witnesses always produce a
// sorted, duplicate-free set.
using VertexSet = std::vector<int>;

// Simple undirected graph on vertices 0..n-1, stored as a dense symmetric
// bit matrix. Immutable after construction, so values can be shared freely
// across threads.
class Graph {
public:
    Graph() = default;

    // Duplicate edges collapse silently; loops and out-of-range endpoints
    // are rejected with the offending pair in the message.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);
    static Graph edgeless(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + (static_cast<unsigned>(v) >> 6)] >>
                (v & 63)) &
               1u;
    }
    int degree(int v) const { return deg_[v]; }
    std::vector<int> neighbors(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    int min_degree() const;
    int max_degree() const;

    // Row v of the adjacency matrix as a bit mask. Only valid for n <= 64.
    std::uint64_t neighbor_mask(int v) const { return bits_[static_cast<std::size_t>(v) * words_]; }

    bool operator==(const Graph& other) const { return n_ == other.n_ && bits_ == other.bits_; }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    void set_edge(int u, int v);

    int n_ = 0;
    int m_ = 0;
    int words_ = 1;  // 64-bit words per row
    std::vector<std::uint64_t> bits_;
    std::vector<int> deg_;
};

struct ComponentLabeling {
    int count = 0;
    std::vector<int> label;  // component id per vertex, ids contiguous from 0
};

ComponentLabeling components(const Graph& g);
bool is_connected(const Graph& g);  // true iff exactly one component
bool is_complete(const Graph& g);

// The common degree when the graph is regular, nothing otherwise.
std::optional<int> regular_degree(const Graph& g);

// A proper 2-coloring (per connected component) when one exists. The first
// side holds vertex 0 of every component.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

struct SubgraphResult {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for vertices that were dropped
    std::vector<int> new_to_old;
};

SubgraphResult induced_subgraph(const Graph& g, const VertexSet& keep);
SubgraphResult delete_vertices(const Graph& g, const VertexSet& drop);

Graph complement(const Graph& g);
// Disjoint union of g and h plus all edges between them; g keeps its labels,
// h is shifted up by g.vertex_count().
Graph join(const Graph& g, const Graph& h);

// Bit mask of a vertex set; validates 0 <= v < n. Only for n <= 64.
std::uint64_t vertex_mask(const VertexSet& s, int n);

// Number of components of the graph induced on the vertices NOT in
// `removed`. Equals components(delete_vertices(g, S)).count and is the hot
// path of every subset-enumeration oracle. Only for n <= 64.
int component_count_excluding(const Graph& g, std::uint64_t removed);

}  // namespace specgraph
