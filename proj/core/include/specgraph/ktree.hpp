#pragma once

#include <utility>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

struct KTreeWitness {
    bool exists = false;
    std::vector<std::pair<int, int>> tree_edges;  // n-1 edges when exists
    int max_degree = 0;                           // of the found tree
};

// Exact backtracking search for a spanning tree with maximum degree <= k.
// Grows one connected partial tree, branching on a frontier edge being in
// or out of the tree. Disconnected input simply reports "none". k >= 2.
KTreeWitness has_spanning_k_tree(const Graph& g, int k);

}  // namespace specgraph
