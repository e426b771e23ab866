#include "specgraph/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace specgraph {

namespace {

// Householder reduction of a symmetric matrix (row-major) to tridiagonal
// form, values-only variant: d gets the diagonal, e the subdiagonal shifted
// to e[0..n-2].
void householder_tridiag(std::vector<double>& a, int n, std::vector<double>& d,
                         std::vector<double>& e) {
    auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    for (int i = n - 1; i >= 1; --i) {
        int l = i - 1;
        double h = 0.0;
        if (l > 0) {
            double scale = 0.0;
            for (int k = 0; k <= l; ++k) scale += std::fabs(A(i, k));
            if (scale == 0.0) {
                e[i] = A(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    A(i, k) /= scale;
                    h += A(i, k) * A(i, k);
                }
                double f = A(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                A(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
                    for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
                    e[j] = g / h;
                    f += e[j] * A(i, j);
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = A(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k) A(j, k) -= f * e[k] + g * A(i, k);
                }
            }
        } else {
            e[i] = A(i, l);
        }
        d[i] = h;
    }
    for (int i = 0; i < n; ++i) d[i] = A(i, i);
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
}

// Implicit-shift QL on a tridiagonal matrix; d becomes the eigenvalues.
// The shared iteration budget guards against a stalled rotation.
void ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, int n) {
    const double eps = std::numeric_limits<double>::epsilon();
    long budget = 50L * n;
    for (int l = 0; l < n; ++l) {
        for (;;) {
            int m = l;
            for (; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= eps * dd) break;
            }
            if (m == l) break;
            if (--budget < 0) throw std::runtime_error("eigensolver failed to converge");
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> matrix, int n) {
    if (n < 1) throw std::invalid_argument("eigensolver needs n >= 1");
    if (matrix.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("matrix size does not match n");
    std::vector<double> d(n, 0.0), e(n, 0.0);
    householder_tridiag(matrix, n, d, e);
    ql_implicit_shift(d, e, n);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

Spectrum adjacency_spectrum(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("spectrum of an empty graph");
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) a[static_cast<std::size_t>(u) * n + v] = 1.0;
    Spectrum s;
    s.values = symmetric_eigenvalues(std::move(a), n);
    s.tolerance = 1e-10;
    return s;
}

double Spectrum::lambda(int k) const {
    if (k < 1 || k > size())
        throw std::out_of_range("eigenvalue index " + std::to_string(k) + " out of range 1.." +
                                std::to_string(size()));
    return values[k - 1];
}

double Spectrum::lambda_abs() const {
    if (size() < 2) throw std::invalid_argument("lambda_abs needs at least two eigenvalues");
    return std::max(std::fabs(values[1]), std::fabs(values.back()));
}

Threshold theta(int d) {
    if (d < 3) throw std::invalid_argument("theta is defined for d >= 3");
    double dd = static_cast<double>(d);
    double disc = d % 2 == 0 ? dd * dd + 12.0 : dd * dd + 8.0;
    return Threshold{d, (dd - 2.0 + std::sqrt(disc)) / 2.0};
}

double average_degree_bound(const Graph& g) {
    if (g.vertex_count() < 1) throw std::invalid_argument("average degree of an empty graph");
    return 2.0 * g.edge_count() / g.vertex_count();
}

InterlacingReport check_interlacing_corollary(const Graph& g, const std::vector<VertexSet>& parts) {
    const int n = g.vertex_count();
    if (parts.empty()) throw std::invalid_argument("interlacing check needs at least one part");
    std::vector<char> seen(n, 0);
    VertexSet all;
    for (const auto& part : parts) {
        if (part.empty()) throw std::invalid_argument("interlacing check: empty part");
        for (int v : part) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("vertex out of range: " + std::to_string(v));
            if (seen[v])
                throw std::invalid_argument("parts overlap at vertex " + std::to_string(v));
            seen[v] = 1;
            all.push_back(v);
        }
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            for (int u : parts[i])
                for (int v : parts[j])
                    if (g.adjacent(u, v))
                        throw std::invalid_argument("edge between parts: (" + std::to_string(u) +
                                                    ", " + std::to_string(v) + ")");

    InterlacingReport rep;
    rep.parts = static_cast<int>(parts.size());
    rep.lambda_p_g = adjacency_spectrum(g).lambda(rep.parts);
    rep.lambda_p_union = adjacency_spectrum(induced_subgraph(g, all).graph).lambda(rep.parts);
    rep.min_lambda1_parts = std::numeric_limits<double>::infinity();
    for (const auto& part : parts) {
        double l1 = adjacency_spectrum(induced_subgraph(g, part).graph).lambda(1);
        rep.min_lambda1_parts = std::min(rep.min_lambda1_parts, l1);
    }
    const double tol = 1e-8;
    rep.pass = rep.lambda_p_g >= rep.lambda_p_union - tol &&
               rep.lambda_p_union >= rep.min_lambda1_parts - tol;
    return rep;
}

}  // namespace specgraph
