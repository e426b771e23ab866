#pragma once

#include <vector>

#include "specgraph/graph.hpp"

namespace specgraph {

// Adjacency eigenvalues, sorted descending. `tolerance` is the absolute
// accuracy bound the solver guarantees for each value.
struct Spectrum {
    std::vector<double> values;
    double tolerance = 0.0;

    int size() const { return static_cast<int>(values.size()); }
    // k-th largest eigenvalue, 1-based.
    double lambda(int k) const;
    // max(|lambda_2|, |lambda_n|); needs at least two eigenvalues.
    double lambda_abs() const;
};

// Full spectrum of the adjacency matrix (Householder tridiagonalization
// followed by implicit-shift QL). Needs n >= 1.
Spectrum adjacency_spectrum(const Graph& g);

// Eigenvalues of a dense symmetric matrix in row-major order, descending.
std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n);

// Largest adjacency eigenvalue attainable by an irregular connected graph
// of maximum degree d meeting the density floor; sits strictly between d-1
// and d for every d >= 3.
struct Threshold {
    int d = 0;
    double value = 0.0;
};
Threshold theta(int d);

// 2m/n, a lower bound on lambda_1. Needs n >= 1.
double average_degree_bound(const Graph& g);

// For pairwise disjoint vertex sets with no edges between them:
//   lambda_p(G) >= lambda_p(G[S_1 + ... + S_p]) >= min_i lambda_1(G[S_i]).
// Overlapping parts, empty parts, or a cross edge raise invalid_argument.
struct InterlacingReport {
    int parts = 0;
    double lambda_p_g = 0.0;
    double lambda_p_union = 0.0;
    double min_lambda1_parts = 0.0;
    bool pass = false;
};
InterlacingReport check_interlacing_corollary(const Graph& g, const std::vector<VertexSet>& parts);

}  // namespace specgraph
