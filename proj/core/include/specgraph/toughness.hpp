#pragma once

#include <optional>

#include "specgraph/graph.hpp"
#include "specgraph/rational.hpp"

namespace specgraph {

// min |S| / c(G-S) over cut sets S that disconnect the graph, kept exact.
// Complete graphs (no such S) take the infinite convention.
struct Toughness {
    bool infinite = false;
    Rational value;           // meaningful when !infinite
    VertexSet witness;        // first minimizing S in size-then-lex order
    int witness_components = 0;
};

// Exhaustive over all subsets; throws invalid_argument on disconnected
// input ("toughness undefined") and on n > 64.
Toughness toughness_exact(const Graph& g);

// toughness_exact(g) >= t, compared exactly.
bool is_t_tough(const Graph& g, const Rational& t);

// Checks c(G-S) <= (k-2)|S| + 2 for every S (empty set included). When it
// fails, `violator` is the first offending S in size-then-lex order and
// `components` is c(G - violator). Needs connected input and k >= 2.
struct WinCondition {
    bool holds = true;
    std::optional<VertexSet> violator;
    int components = 0;
};
WinCondition win_condition(const Graph& g, int k);

}  // namespace specgraph
