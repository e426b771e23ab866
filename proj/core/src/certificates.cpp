#include "specgraph/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specgraph/connectivity.hpp"

namespace specgraph {

std::string to_string(TheoremId id) {
    switch (id) {
        case TheoremId::LConn: return "L_CONN";
        case TheoremId::ToughOne: return "TOUGH_ONE";
        case TheoremId::BiparTough: return "BIPAR_TOUGH";
        case TheoremId::TauFloor: return "TAU_FLOOR";
        case TheoremId::BrouwerConj: return "BROUWER_CONJ";
        case TheoremId::KTree: return "K_TREE";
        case TheoremId::EdgeConnCioaba: return "EDGE_CONN_CIOABA";
    }
    return "?";
}

std::string to_string(CertStatus s) {
    switch (s) {
        case CertStatus::Certified: return "Certified";
        case CertStatus::NotApplicable: return "NotApplicable";
        case CertStatus::Inconclusive: return "Inconclusive";
        case CertStatus::HypothesisFailed: return "HypothesisFailed";
    }
    return "?";
}

std::string cli_name(TheoremId id) {
    switch (id) {
        case TheoremId::LConn: return "l-conn";
        case TheoremId::ToughOne: return "tough-one";
        case TheoremId::BiparTough: return "bipar-tough";
        case TheoremId::TauFloor: return "tau-floor";
        case TheoremId::BrouwerConj: return "brouwer-conj";
        case TheoremId::KTree: return "k-tree";
        case TheoremId::EdgeConnCioaba: return "edge-conn";
    }
    return "?";
}

std::optional<TheoremId> theorem_from_cli_name(const std::string& name) {
    for (TheoremId id : {TheoremId::LConn, TheoremId::ToughOne, TheoremId::BiparTough,
                         TheoremId::TauFloor, TheoremId::BrouwerConj, TheoremId::KTree,
                         TheoremId::EdgeConnCioaba}) {
        if (cli_name(id) == name) return id;
    }
    return std::nullopt;
}

Margin compare_with_margin(double value, double threshold, double eps) {
    if (value < threshold - eps) return Margin::Below;
    if (value > threshold + eps) return Margin::Above;
    return Margin::Within;
}

CertificationInputs CertificationInputs::compute(const Graph& g) {
    CertificationInputs in;
    in.n = g.vertex_count();
    in.m = g.edge_count();
    in.connected = in.n >= 1 && is_connected(g);
    in.bipartite = bipartition(g).has_value();
    in.degree = regular_degree(g);
    in.kappa_prime = in.n >= 2 && in.connected ? edge_connectivity(g) : 0;
    if (in.n >= 1) in.spectrum = adjacency_spectrum(g);
    return in;
}

namespace {

int ceil_div(long num, long den) { return static_cast<int>((num + den - 1) / den); }

struct CertBuilder {
    Certificate cert;
    bool failed = false;

    explicit CertBuilder(TheoremId id, double eps) {
        cert.theorem = id;
        cert.epsilon = eps;
    }

    void require(const std::string& name, bool ok) {
        cert.hypotheses.push_back({name, std::nullopt, "", std::nullopt, ok});
        failed |= !ok;
    }

    void note(const std::string& name, double value, const std::string& relation, double threshold,
              bool ok) {
        cert.hypotheses.push_back({name, value, relation, threshold, ok});
        failed |= !ok;
    }

    // Decides the certificate from the eigenvalue test every spectral
    // theorem boils down to: lambda_index < threshold with margin eps.
    void decide_spectral(const CertificationInputs& in, int index, double threshold) {
        cert.index_used = index;
        cert.threshold = threshold;
        if (index > in.n) {
            cert.status = CertStatus::NotApplicable;
            return;
        }
        double lam = in.spectrum.lambda(index);
        cert.lambda_at_index = lam;
        Margin m = compare_with_margin(lam, threshold, cert.epsilon);
        std::string name = "lambda_" + std::to_string(index);
        cert.hypotheses.push_back({name, lam, "<", threshold, m == Margin::Below});
        switch (m) {
            case Margin::Below: cert.status = CertStatus::Certified; break;
            case Margin::Within: cert.status = CertStatus::Inconclusive; break;
            case Margin::Above: cert.status = CertStatus::HypothesisFailed; break;
        }
    }
};

}  // namespace

Certificate certify_l_connectivity(const CertificationInputs& in, int k, int l, double eps) {
    CertBuilder b(TheoremId::LConn, eps);
    b.cert.k = k;
    b.cert.l = l;
    b.cert.conclusion = "kappa_" + std::to_string(l) + " >= " + std::to_string(k);
    b.require("l >= k >= 2", k >= 2 && l >= k);
    b.require("connected", in.connected);
    b.require("regular", in.degree.has_value());
    if (b.failed) {
        b.cert.status = CertStatus::HypothesisFailed;
        return b.cert;
    }
    int d = *in.degree;
    b.note("d", d, ">=", 3, d >= 3);
    b.note("n", in.n, ">=", k + l - 1, in.n >= k + l - 1);
    if (b.failed) {
        b.cert.status = CertStatus::HypothesisFailed;
        return b.cert;
    }
    if (in.kappa_prime == d) {
        b.note("kappa_prime", in.kappa_prime, "==", d, true);
        b.cert.status = CertStatus::Certified;
        return b.cert;
    }
    b.decide_spectral(in, ceil_div(static_cast<long>(l - k + 1) * d, d - in.kappa_prime),
                      theta(d).value);
    return b.cert;
}

Certificate certify_toughness_one(const CertificationInputs& in, double eps) {
    CertBuilder b(TheoremId::ToughOne, eps);
    b.cert.conclusion = "t >= 1";
    b.require("connected", in.connected);
    b.require("regular", in.degree.has_value());
    if (b.failed) {
        b.cert.status = CertStatus::HypothesisFailed;
        return b.cert;
    }
    int d = *in.degree;
    b.note("d", d, ">=", 3, d >= 3);
    if (b.failed) {
        b.cert.status = CertStatus::HypothesisFailed;
        return b.cert;
    }
    if (in.kappa_prime == d) {
        b.note("kappa_prime", in.kappa_prime, "==", d, true);
        b.cert.status = CertStatus::Certified;
        return b.cert;
    }
    b.decide_spectral(in, ceil_div(d, d - in.kappa_prime), theta(d).value);
    return b.cert;
}

Certificate certify_bipartite_toughness(const CertificationInputs& in, double eps) {
    CertBuilder b(TheoremId::BiparTough, eps);
    b.cert.conclusion = "t = 1";
    b.require("connected", in.connected);
    b.require("bipartite", in.bipartite);
    b.require("regular", in.degree.has_value());
    if (b.failed) {
        b.cert.status = CertStatus::HypothesisFailed;
        return b.cert;
    }
    int d = *in.degree;
    if (in.kappa_prime == d) {
        // edge connectivity maxed out: the eigenvalue route has no index to
        // inspect, and bipartite regular toughness never exceeds 1 anyway
        b.note("kappa_prime", in.kappa_prime, "<", d, false);
        b.cert.status = CertStatus::NotApplicable;
        return b.cert;
    }
    b.note("kappa_prime", in.kappa_prime, "<", d, true);
    b.decide_spectral(in, ceil_div(d, d - in.kappa_prime),
                      d - (d - 1.0) / (2.0 * d));
    return b.cert;
}

Certificate toughness_floor(const CertificationInputs& in, std::optional<Rational> tau) {
    CertBuilder b(TheoremId::TauFloor, kDefaultEpsilon);
    b.require("connected", in.connected);
    b.require("regular", in.degree.has_value());
    b.require("n >= 2", in.n >= 2);
    if (!b.failed) b.note("d", *in.degree, ">=", 1, *in.degree >= 1);
    if (b.failed) {
        b.cert.status = CertStatus::HypothesisFailed;
        b.cert.conclusion = "t >= kappa_prime/d";
        return b.cert;
    }
    Rational floor(in.kappa_prime, *in.degree);
    b.cert.rational_bound = floor;
    b.cert.conclusion = "t >= " + floor.str();
    if (tau) {
        bool ok = *tau <= floor;
        b.cert.hypotheses.push_back({"tau <= kappa_prime/d", tau->to_double(), "<=",
                                     floor.to_double(), ok});
        if (!ok) {
            b.cert.status = CertStatus::HypothesisFailed;
            return b.cert;
        }
        b.cert.rational_bound = *tau;
        b.cert.conclusion = "t >= " + tau->str();
    }
    b.cert.status = CertStatus::Certified;
    return b.cert;
}

Certificate brouwer_conjecture_bound(const CertificationInputs& in) {
    CertBuilder b(TheoremId::BrouwerConj, kDefaultEpsilon);
    b.cert.conclusion = "t > d/lambda_2 - 1";
    b.require("connected", in.connected);
    b.require("regular", in.degree.has_value());
    if (!b.failed) b.note("d", *in.degree, ">=", 3, *in.degree >= 3);
    if (b.failed) {
        b.cert.status = CertStatus::HypothesisFailed;
        return b.cert;
    }
    int d = *in.degree;
    if (in.kappa_prime >= d) {
        b.note("kappa_prime", in.kappa_prime, "<", d, false);
        b.cert.status = CertStatus::NotApplicable;
        return b.cert;
    }
    b.note("kappa_prime", in.kappa_prime, "<", d, true);
    double lam2 = in.spectrum.lambda(2);
    b.cert.index_used = 2;
    b.cert.lambda_at_index = lam2;
    b.cert.numeric_bound = d / lam2 - 1.0;
    b.cert.conclusion = "t > " + std::to_string(d) + "/lambda_2 - 1";
    b.cert.status = CertStatus::Certified;
    return b.cert;
}

Certificate certify_spanning_k_tree(const CertificationInputs& in, int k, double eps) {
    CertBuilder b(TheoremId::KTree, eps);
    b.cert.k = k;
    b.cert.conclusion = "spanning tree with max degree <= " + std::to_string(k) + " exists";
    b.require("k >= 3", k >= 3);
    b.require("connected", in.connected);
    b.require("regular", in.degree.has_value());
    if (b.failed) {
        b.cert.status = CertStatus::HypothesisFailed;
        return b.cert;
    }
    int d = *in.degree;
    b.note("d", d, ">=", 3, d >= 3);
    if (b.failed) {
        b.cert.status = CertStatus::HypothesisFailed;
        return b.cert;
    }
    long l = static_cast<long>(d) - static_cast<long>(k - 2) * in.kappa_prime;
    b.cert.l = static_cast<int>(l);
    if (l <= 0) {
        // edge connectivity alone already forces the tree
        b.note("d - (k-2)*kappa_prime", static_cast<double>(l), "<=", 0, true);
        b.cert.status = CertStatus::Certified;
        return b.cert;
    }
    b.decide_spectral(in, ceil_div(3L * d, l), d - d / ((k - 2.0) * (d + 1.0)));
    return b.cert;
}

Certificate certify_edge_connectivity(const CertificationInputs& in, int k, double eps) {
    CertBuilder b(TheoremId::EdgeConnCioaba, eps);
    b.cert.k = k;
    b.cert.conclusion = "kappa_prime >= " + std::to_string(k);
    b.require("regular", in.degree.has_value());
    if (b.failed) {
        b.cert.status = CertStatus::HypothesisFailed;
        return b.cert;
    }
    int d = *in.degree;
    b.note("k", k, ">=", 2, k >= 2);
    b.note("k", k, "<=", d, k <= d);
    if (b.failed || in.n < 2) {
        b.cert.status = CertStatus::HypothesisFailed;
        return b.cert;
    }
    b.decide_spectral(in, 2, d - 2.0 * (k - 1) / (d + 1.0));
    return b.cert;
}

// graph-taking conveniences

Certificate certify_l_connectivity(const Graph& g, int k, int l, double eps) {
    return certify_l_connectivity(CertificationInputs::compute(g), k, l, eps);
}
Certificate certify_toughness_one(const Graph& g, double eps) {
    return certify_toughness_one(CertificationInputs::compute(g), eps);
}
Certificate certify_bipartite_toughness(const Graph& g, double eps) {
    return certify_bipartite_toughness(CertificationInputs::compute(g), eps);
}
Certificate toughness_floor(const Graph& g, std::optional<Rational> tau) {
    return toughness_floor(CertificationInputs::compute(g), tau);
}
Certificate brouwer_conjecture_bound(const Graph& g) {
    return brouwer_conjecture_bound(CertificationInputs::compute(g));
}
Certificate certify_spanning_k_tree(const Graph& g, int k, double eps) {
    return certify_spanning_k_tree(CertificationInputs::compute(g), k, eps);
}
Certificate certify_edge_connectivity(const Graph& g, int k, double eps) {
    return certify_edge_connectivity(CertificationInputs::compute(g), k, eps);
}

namespace {

void require_connected_regular(const CertificationInputs& in) {
    if (!in.connected || !in.degree || in.n < 2)
        throw std::invalid_argument("bounds need a connected regular graph with n >= 2");
}

}  // namespace

BoundsReport spectral_toughness_bounds(const CertificationInputs& in) {
    require_connected_regular(in);
    const double d = *in.degree;
    const double lam = in.spectrum.lambda_abs();
    const double lam2 = in.spectrum.lambda(2);
    BoundsReport rep;

    rep.entries.push_back({"alon",
                           (d * d / (d * lam + lam * lam) - 1.0) / 3.0,
                           {{"d", d}, {"lambda", lam}},
                           std::nullopt,
                           "t exceeds this bound"});
    rep.entries.push_back({"brouwer",
                           d / lam - 2.0,
                           {{"d", d}, {"lambda", lam}},
                           std::nullopt,
                           "t exceeds this bound"});

    double liu_chen = in.degree.value() % 2 == 0 ? d - 1.0 + 3.0 / (d + 1.0)
                                                 : d - 1.0 + 2.0 / (d + 1.0);
    bool fired = compare_with_margin(lam2, liu_chen, kDefaultEpsilon) == Margin::Below;
    rep.entries.push_back({"liu_chen",
                           liu_chen,
                           {{"lambda_2", lam2}, {"d", d}},
                           fired,
                           "t >= 1 when lambda_2 is below this threshold"});

    double tau_cap = Rational(in.kappa_prime, *in.degree).to_double();
    double tau_spec = (d - lam2) * (d + 1.0) / d;
    bool cap_binding = compare_with_margin(lam2, d - tau_cap * d / (d + 1.0),
                                           kDefaultEpsilon) == Margin::Below;
    rep.entries.push_back({"cioaba_wong_tau",
                           std::min(tau_cap, tau_spec),
                           {{"kappa_prime", static_cast<double>(in.kappa_prime)},
                            {"d", d},
                            {"lambda_2", lam2}},
                           cap_binding,
                           "t >= tau for positive tau <= this value (tau <= kappa_prime/d)"});

    rep.entries.push_back({"brouwer_conj",
                           d / lam2 - 1.0,
                           {{"d", d}, {"lambda_2", lam2}},
                           in.kappa_prime < *in.degree,
                           "t exceeds this bound when kappa_prime < d"});
    return rep;
}

BoundsReport spectral_connectivity_bounds(const CertificationInputs& in) {
    require_connected_regular(in);
    const double d = *in.degree;
    const double lam = in.spectrum.lambda_abs();
    const double lam2 = in.spectrum.lambda(2);
    BoundsReport rep;

    // d - lam2 overshoots kappa = n-1 on complete graphs; the clamp keeps the
    // bound valid there and is inert everywhere else
    rep.entries.push_back({"fiedler_kappa",
                           std::min(d - lam2, in.n - 1.0),
                           {{"d", d}, {"lambda_2", lam2}, {"n", static_cast<double>(in.n)}},
                           std::nullopt,
                           "kappa is at least this value"});
    rep.entries.push_back({"ks_kappa",
                           d - 36.0 * lam * lam / d,
                           {{"d", d}, {"lambda", lam}},
                           std::nullopt,
                           "kappa is at least this value"});

    int best_k = 1;  // connectivity already gives kappa_prime >= 1
    for (int k = *in.degree; k >= 2; --k) {
        if (compare_with_margin(lam2, d - 2.0 * (k - 1) / (d + 1.0), kDefaultEpsilon) ==
            Margin::Below) {
            best_k = k;
            break;
        }
    }
    rep.entries.push_back({"cioaba_edge_k",
                           static_cast<double>(best_k),
                           {{"lambda_2", lam2}, {"d", d}},
                           best_k >= 2,
                           "kappa_prime is at least this value"});
    return rep;
}

BoundsReport spectral_toughness_bounds(const Graph& g) {
    return spectral_toughness_bounds(CertificationInputs::compute(g));
}
BoundsReport spectral_connectivity_bounds(const Graph& g) {
    return spectral_connectivity_bounds(CertificationInputs::compute(g));
}

}  // namespace specgraph
