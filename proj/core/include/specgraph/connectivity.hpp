#pragma once

#include <map>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

// Maximum number of edge-disjoint source-sink paths, or of internally
// vertex-disjoint paths when vertex_capacities is set (vertex splitting on
// the unit-capacity network). source != sink required.
int max_flow_unit(const Graph& g, int source, int sink, bool vertex_capacities);

// Smallest edge cut, as the minimum of max-flow values from a fixed root.
// 0 for disconnected input. Needs n >= 2.
int edge_connectivity(const Graph& g);

// Smallest vertex cut; n-1 for complete graphs, otherwise the minimum
// vertex max-flow over nonadjacent pairs. Needs n >= 2.
int vertex_connectivity(const Graph& g);

// Fewest vertices whose removal leaves at least l components or fewer than
// l vertices (0 if the graph already has >= l components or n <= l-1).
// The witness is the lexicographically smallest minimizing set. l >= 2.
struct LConnectivity {
    int value = 0;
    VertexSet witness;
};
LConnectivity l_connectivity(const Graph& g, int l);

// Exact maximum independent set size, branch and bound.
int independence_number(const Graph& g);

struct ConnectivityProfile {
    int kappa = 0;
    int kappa_prime = 0;
    int alpha = 0;
    std::map<int, LConnectivity> kappa_l;
};

// kappa/kappa_prime/alpha plus kappa_l for each requested l. Needs n >= 2.
ConnectivityProfile connectivity_profile(const Graph& g, const std::vector<int>& ls);

}  // namespace specgraph
