#pragma once

#include <optional>
#include <string>
#include <vector>

#include "specgraph/graph.hpp"
#include "specgraph/rational.hpp"
#include "specgraph/spectrum.hpp"

namespace specgraph {

// The spectral theorems the certifiers implement. Tags are stable across
// reports and test fixtures.
enum class TheoremId {
    LConn,           // generalized connectivity: kappa_l >= k
    ToughOne,        // toughness >= 1
    BiparTough,      // bipartite case: toughness exactly 1
    TauFloor,        // toughness >= kappa'/d, no spectral hypothesis
    BrouwerConj,     // toughness > d/lambda_2 - 1 when kappa' < d
    KTree,           // spanning tree with maximum degree <= k
    EdgeConnCioaba,  // kappa' >= k from lambda_2
};

enum class CertStatus {
    Certified,         // hypotheses hold with margin; conclusion guaranteed
    NotApplicable,     // theorem has nothing to say (index out of range, ...)
    Inconclusive,      // a comparison landed inside the numeric margin
    HypothesisFailed,  // some hypothesis is cleanly violated
};

std::string to_string(TheoremId id);
std::string to_string(CertStatus s);
// CLI spelling ("l-conn", "tough-one", ...) -> tag.
std::optional<TheoremId> theorem_from_cli_name(const std::string& name);
std::string cli_name(TheoremId id);

// Margin below which a spectral comparison is not trusted either way.
inline constexpr double kDefaultEpsilon = 1e-9;

// Three-way comparison all certifiers route their eigenvalue tests through.
enum class Margin { Below, Within, Above };
Margin compare_with_margin(double value, double threshold, double eps);

struct Hypothesis {
    std::string name;
    std::optional<double> value;
    std::string relation;
    std::optional<double> threshold;
    bool ok = false;
};

struct Certificate {
    TheoremId theorem = TheoremId::ToughOne;
    CertStatus status = CertStatus::HypothesisFailed;
    std::string conclusion;  // the property the theorem would guarantee
    std::vector<Hypothesis> hypotheses;
    std::optional<int> index_used;  // 1-based eigenvalue index inspected
    std::optional<double> lambda_at_index;
    std::optional<double> threshold;
    double epsilon = kDefaultEpsilon;
    std::optional<int> k;  // theorem parameters, echoed for reports
    std::optional<int> l;
    std::optional<Rational> rational_bound;  // exact bound (TauFloor)
    std::optional<double> numeric_bound;     // evaluated bound (BrouwerConj)
};

// Everything a certifier is allowed to read: spectrum plus the polynomial
// connectivity value. The exponential oracles stay on the other side of the
// fence so soundness checks are a genuine cross-check.
struct CertificationInputs {
    int n = 0;
    int m = 0;
    bool connected = false;
    bool bipartite = false;
    std::optional<int> degree;
    int kappa_prime = 0;  // 0 when n < 2 or disconnected
    Spectrum spectrum;    // empty when n == 0

    static CertificationInputs compute(const Graph& g);
};

// kappa_l >= k for connected d-regular graphs (d >= 3, l >= k >= 2,
// n >= k+l-1): immediate when kappa' = d, otherwise decided by
// lambda_ceil((l-k+1)d/(d-kappa')) against theta(d).
Certificate certify_l_connectivity(const CertificationInputs& in, int k, int l,
                                   double eps = kDefaultEpsilon);
Certificate certify_l_connectivity(const Graph& g, int k, int l, double eps = kDefaultEpsilon);

// t >= 1 for connected d-regular graphs (d >= 3): immediate when
// kappa' = d, otherwise lambda_ceil(d/(d-kappa')) against theta(d).
Certificate certify_toughness_one(const CertificationInputs& in, double eps = kDefaultEpsilon);
Certificate certify_toughness_one(const Graph& g, double eps = kDefaultEpsilon);

// t = 1 for connected bipartite d-regular graphs with kappa' < d, decided
// by the same index against d - (d-1)/(2d). kappa' = d is NotApplicable
// (bipartite regular toughness never exceeds 1 anyway).
Certificate certify_bipartite_toughness(const CertificationInputs& in,
                                        double eps = kDefaultEpsilon);
Certificate certify_bipartite_toughness(const Graph& g, double eps = kDefaultEpsilon);

// t >= kappa'/d for every connected d-regular graph; no spectral
// hypothesis, so the status is Certified whenever the graph qualifies.
// With tau set, additionally requires tau <= kappa'/d (exact) and the
// conclusion becomes t >= tau.
Certificate toughness_floor(const CertificationInputs& in,
                            std::optional<Rational> tau = std::nullopt);
Certificate toughness_floor(const Graph& g, std::optional<Rational> tau = std::nullopt);

// t > d/lambda_2 - 1 for connected d-regular graphs (d >= 3) with
// kappa' < d; kappa' = d is NotApplicable.
Certificate brouwer_conjecture_bound(const CertificationInputs& in);
Certificate brouwer_conjecture_bound(const Graph& g);

// Spanning tree with maximum degree <= k for connected d-regular graphs
// (k >= 3). With l = d - (k-2)kappa': immediate when l <= 0, otherwise
// lambda_ceil(3d/l) against d - d/((k-2)(d+1)).
Certificate certify_spanning_k_tree(const CertificationInputs& in, int k,
                                    double eps = kDefaultEpsilon);
Certificate certify_spanning_k_tree(const Graph& g, int k, double eps = kDefaultEpsilon);

// kappa' >= k for d-regular graphs (d >= k >= 2), decided by lambda_2
// against d - 2(k-1)/(d+1).
Certificate certify_edge_connectivity(const CertificationInputs& in, int k,
                                      double eps = kDefaultEpsilon);
Certificate certify_edge_connectivity(const Graph& g, int k, double eps = kDefaultEpsilon);

struct BoundEntry {
    std::string name;
    double value = 0.0;
    std::vector<std::pair<std::string, double>> inputs;
    std::optional<bool> implies;  // threshold-style tests: did it fire
    std::string conclusion;
};

struct BoundsReport {
    std::vector<BoundEntry> entries;
};

// Classical eigenvalue lower bounds on toughness (alon, brouwer, liu_chen
// threshold test, cioaba_wong_tau, brouwer_conj). Needs connected regular
// input with n >= 2.
BoundsReport spectral_toughness_bounds(const CertificationInputs& in);
BoundsReport spectral_toughness_bounds(const Graph& g);

// Classical eigenvalue lower bounds on connectivity (fiedler_kappa,
// ks_kappa, cioaba_edge_k). Same preconditions.
BoundsReport spectral_connectivity_bounds(const CertificationInputs& in);
BoundsReport spectral_connectivity_bounds(const Graph& g);

}  // namespace specgraph
