#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

// Complement of a perfect matching on t vertices (t even, >= 2); vertices
// 2i and 2i+1 are the nonadjacent partners. (t-2)-regular.
Graph matching_complement(int t);

// The unique lambda_1-extremal member of the irregular family for maximum
// degree d >= 3: matching complement joined with K_2 (odd d) or K_3 (even
// d). Matching-complement vertices come first, clique vertices last.
Graph x_graph(int d);

// Two disjoint copies of x_graph(4) plus an apex adjacent to the four
// degree-3 vertices. 11 vertices, 4-regular, cut vertex 10; its second
// eigenvalue meets theta(4) exactly, so the spectral toughness test sits
// on the fence while the true toughness is 1/2. Fixed layout: copy one on
// 0..4, copy two on 5..9, apex 10.
Graph gadget_4regular();

// Clause-by-clause membership test for the irregular family with maximum
// degree d: connected, irregular, max degree exactly d, n >= d+1,
// 2m >= dn-d+1, and enough degree-d vertices (>= 2 odd d, >= 3 even d).
struct XFamilyCheck {
    bool connected = false;
    bool irregular = false;
    bool max_degree_is_d = false;
    bool order_ok = false;
    bool size_ok = false;
    bool degree_d_count_ok = false;
    int degree_d_count = 0;
    bool member = false;
};
XFamilyCheck membership_x_family(const Graph& g, int d);

Graph cycle(int n);                         // n >= 3
Graph path_graph(int n);                    // n >= 1
Graph complete(int n);                      // n >= 0
Graph complete_bipartite(int a, int b);     // a, b >= 0
Graph petersen();
Graph hypercube(int dim);                   // 0 <= dim <= 9
Graph star(int leaves);                     // center 0, leaves >= 0
Graph named_graph(const std::string& name, const std::vector<int>& params);

// Uniform simple d-regular graph via the pairing model with full rejection
// (retry on any loop or duplicate edge, capped at 10^4 attempts). Same seed
// gives the identical edge set. Needs nd even and 0 <= d < n.
Graph random_regular(int n, int d, std::uint64_t seed);

// Every connected d-regular graph on labeled vertices 0..n-1, exactly once,
// by backtracking over vertex pairs with degree feasibility pruning. Odd
// n*d yields an empty stream.
void enumerate_connected_regular(int n, int d, const std::function<void(const Graph&)>& visit);
std::uint64_t count_connected_regular(int n, int d);

// Input family of a soundness sweep.
struct FamilySpec {
    enum class Kind { Named, RandomRegular, ExhaustiveRegular, File };
    Kind kind = Kind::ExhaustiveRegular;
    std::string name;         // Named: graph name; File: path
    std::vector<int> params;  // Named: constructor parameters
    std::vector<int> ns;      // Exhaustive: orders to enumerate; Random: single order
    int d = 0;
    int count = 0;            // RandomRegular: graphs to draw
    std::uint64_t seed = 0;
};

}  // namespace specgraph
