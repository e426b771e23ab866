#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "specgraph/certificates.hpp"
#include "specgraph/connectivity.hpp"
#include "specgraph/constructions.hpp"
#include "specgraph/graph.hpp"
#include "specgraph/ktree.hpp"
#include "specgraph/spectrum.hpp"
#include "specgraph/toughness.hpp"

namespace specgraph {

// An exact computation was requested on a graph above its size cap and
// neither --force nor --skip-exponential was given.
class SizeGuardError : public std::runtime_error {
public:
    explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

struct AnalyzeOptions {
    bool skip_exponential = false;  // omit toughness/kappa_l/alpha/k-tree
    bool force = false;             // ignore the size caps
    std::vector<int> kappa_l_values;    // empty means 2..alpha
    std::vector<int> ktree_values{2, 3, 4};
    int lconn_k = 2;
    int lconn_l = 2;
    double epsilon = kDefaultEpsilon;
    int exponential_cap = 16;  // toughness, kappa_l, alpha
    int ktree_cap = 22;
};

struct AnalysisReport {
    std::string command;
    std::string graph6;  // empty when n > 62
    int n = 0;
    int m = 0;
    std::optional<int> degree;
    bool connected = false;
    bool bipartite = false;
    std::optional<Spectrum> spectrum;            // n >= 1
    std::optional<int> kappa;                    // n >= 2
    std::optional<int> kappa_prime;              // n >= 2
    std::optional<int> alpha;
    std::map<int, LConnectivity> kappa_l;
    std::optional<Toughness> toughness;          // connected graphs only
    std::map<int, KTreeWitness> spanning_k_trees;
    std::vector<Certificate> certificates;
    std::optional<BoundsReport> toughness_bounds;     // connected regular
    std::optional<BoundsReport> connectivity_bounds;  // connected regular
    bool exponential_skipped = false;
};

AnalysisReport analyze_graph(const Graph& g, const AnalyzeOptions& opts = {});

std::string to_json(const AnalysisReport& report);
std::string render_pretty(const AnalysisReport& report);
std::string to_json(const Certificate& cert);

struct SweepOptions {
    std::vector<TheoremId> theorems;  // empty means all seven
    std::vector<std::pair<int, int>> l_conn_params{{2, 2}, {2, 3}, {2, 4}, {3, 3}, {3, 4}};
    std::vector<int> ktree_values{3, 4};
    int jobs = 0;  // 0 means hardware concurrency
    double epsilon = kDefaultEpsilon;
    int oracle_cap = 16;  // largest n whose certified claims get oracle-checked
    bool force = false;
};

struct TheoremCounts {
    long certified = 0;
    long not_applicable = 0;
    long inconclusive = 0;
    long hypothesis_failed = 0;
};

struct Violation {
    std::string graph6;
    std::string theorem;  // tag plus parameters, e.g. "L_CONN k=2 l=3"
    std::string detail;
};

struct SweepReport {
    std::string command;
    std::vector<FamilySpec> families;
    long graphs_examined = 0;
    long oracle_checks = 0;
    std::map<TheoremId, TheoremCounts> counts;
    std::vector<Violation> violations;  // sorted; empty means the sweep is clean
    double wall_seconds = 0.0;
};

// Certifies every graph, then replays each Certified conclusion against the
// exact oracle for that theorem. Throws SizeGuardError if an oracle check
// would exceed the cap without force.
SweepReport run_soundness_sweep(const std::vector<Graph>& graphs, const SweepOptions& opts = {});

std::string to_json(const SweepReport& report);
std::string render_pretty(const SweepReport& report);

// Materializes a family; exhaustive enumeration is capped (n <= 10 for
// d <= 3, n <= 9 above) unless force is set.
std::vector<Graph> materialize_family(const FamilySpec& spec, bool force = false);

std::string family_to_string(const FamilySpec& spec);

}  // namespace specgraph
