#include "specgraph/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "specgraph/formats.hpp"

namespace specgraph {

namespace {

using nlohmann::ordered_json;

// doubles go through a 12-significant-digit round trip so report bytes do
// not depend on the last ulp of the eigensolver
double rounded(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string fmt6(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

ordered_json json_spectrum(const Spectrum& sp) {
    ordered_json values = ordered_json::array();
    for (double v : sp.values) values.push_back(rounded(v));
    return ordered_json{{"values", values}, {"tolerance", rounded(sp.tolerance)}};
}

ordered_json json_certificate(const Certificate& cert) {
    ordered_json j;
    j["theorem"] = to_string(cert.theorem);
    j["operation"] = cli_name(cert.theorem);
    j["status"] = to_string(cert.status);
    if (cert.k) j["k"] = *cert.k;
    if (cert.l) j["l"] = *cert.l;
    j["conclusion"] = cert.conclusion;
    if (cert.index_used) j["index_used"] = *cert.index_used;
    if (cert.lambda_at_index) j["lambda_at_index"] = rounded(*cert.lambda_at_index);
    if (cert.threshold) j["threshold"] = rounded(*cert.threshold);
    j["epsilon"] = cert.epsilon;
    if (cert.rational_bound)
        j["rational_bound"] =
            ordered_json::array({cert.rational_bound->num(), cert.rational_bound->den()});
    if (cert.numeric_bound) j["numeric_bound"] = rounded(*cert.numeric_bound);
    ordered_json hyps = ordered_json::array();
    for (const Hypothesis& h : cert.hypotheses) {
        ordered_json hj;
        hj["name"] = h.name;
        if (h.value) hj["value"] = rounded(*h.value);
        if (!h.relation.empty()) hj["relation"] = h.relation;
        if (h.threshold) hj["threshold"] = rounded(*h.threshold);
        hj["ok"] = h.ok;
        hyps.push_back(std::move(hj));
    }
    j["hypotheses"] = std::move(hyps);
    return j;
}

ordered_json json_bounds(const BoundsReport& b) {
    ordered_json arr = ordered_json::array();
    for (const BoundEntry& e : b.entries) {
        ordered_json j;
        j["name"] = e.name;
        j["value"] = rounded(e.value);
        ordered_json in = ordered_json::object();
        for (const auto& [key, val] : e.inputs) in[key] = rounded(val);
        j["inputs"] = std::move(in);
        if (e.implies) j["implies"] = *e.implies;
        j["conclusion"] = e.conclusion;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string graph_tag(const Graph& g) {
    if (g.vertex_count() <= 62) return to_graph6(g);
    return "n=" + std::to_string(g.vertex_count());
}

}  // namespace

AnalysisReport analyze_graph(const Graph& g, const AnalyzeOptions& opts) {
    AnalysisReport r;
    const int n = g.vertex_count();
    const CertificationInputs in = CertificationInputs::compute(g);

    r.n = n;
    r.m = g.edge_count();
    if (n <= 62) r.graph6 = to_graph6(g);
    r.degree = in.degree;
    r.connected = in.connected;
    r.bipartite = in.bipartite;
    if (n >= 1) r.spectrum = in.spectrum;
    if (n >= 2) {
        r.kappa = vertex_connectivity(g);
        r.kappa_prime = in.kappa_prime;
    }

    if (opts.skip_exponential) {
        r.exponential_skipped = true;
    } else {
        if (n > opts.exponential_cap && !opts.force)
            throw SizeGuardError(
                "exact toughness/kappa_l/alpha on n=" + std::to_string(n) + " exceeds the cap of " +
                std::to_string(opts.exponential_cap) +
                "; rerun with --force or --skip-exponential");
        r.alpha = independence_number(g);
        std::vector<int> ls = opts.kappa_l_values;
        if (ls.empty())
            for (int l = 2; l <= *r.alpha; ++l) ls.push_back(l);
        for (int l : ls)
            if (l >= 2) r.kappa_l.emplace(l, l_connectivity(g, l));
        if (r.connected) r.toughness = toughness_exact(g);

        if (n > opts.ktree_cap && !opts.force)
            throw SizeGuardError("spanning tree search on n=" + std::to_string(n) +
                                 " exceeds the cap of " + std::to_string(opts.ktree_cap) +
                                 "; rerun with --force or --skip-exponential");
        for (int k : opts.ktree_values)
            if (k >= 2) r.spanning_k_trees.emplace(k, has_spanning_k_tree(g, k));
    }

    r.certificates.push_back(certify_l_connectivity(in, opts.lconn_k, opts.lconn_l, opts.epsilon));
    r.certificates.push_back(certify_toughness_one(in, opts.epsilon));
    r.certificates.push_back(certify_bipartite_toughness(in, opts.epsilon));
    r.certificates.push_back(toughness_floor(in));
    r.certificates.push_back(brouwer_conjecture_bound(in));
    for (int k : opts.ktree_values)
        if (k >= 3) r.certificates.push_back(certify_spanning_k_tree(in, k, opts.epsilon));

    if (r.connected && r.degree && n >= 2) {
        r.toughness_bounds = spectral_toughness_bounds(in);
        r.connectivity_bounds = spectral_connectivity_bounds(in);
    }
    return r;
}

std::string to_json(const AnalysisReport& r) {
    ordered_json j;
    j["command"] = r.command;
    ordered_json graph;
    if (!r.graph6.empty()) graph["graph6"] = r.graph6;
    graph["n"] = r.n;
    graph["m"] = r.m;
    if (r.degree) graph["degree"] = *r.degree;
    graph["connected"] = r.connected;
    graph["bipartite"] = r.bipartite;
    j["graph"] = std::move(graph);
    if (r.spectrum) j["spectrum"] = json_spectrum(*r.spectrum);

    ordered_json conn = ordered_json::object();
    if (r.kappa) conn["kappa"] = *r.kappa;
    if (r.kappa_prime) conn["kappa_prime"] = *r.kappa_prime;
    if (r.alpha) conn["alpha"] = *r.alpha;
    if (!r.kappa_l.empty()) {
        ordered_json kl = ordered_json::object();
        for (const auto& [l, lc] : r.kappa_l)
            kl[std::to_string(l)] = ordered_json{{"value", lc.value}, {"witness", lc.witness}};
        conn["kappa_l"] = std::move(kl);
    }
    if (!conn.empty()) j["connectivity"] = std::move(conn);

    if (r.toughness) {
        const Toughness& t = *r.toughness;
        ordered_json tj;
        tj["infinite"] = t.infinite;
        if (!t.infinite) {
            tj["value"] = ordered_json::array({t.value.num(), t.value.den()});
            tj["numeric"] = rounded(t.value.to_double());
            tj["witness"] = t.witness;
            tj["witness_components"] = t.witness_components;
        }
        j["toughness"] = std::move(tj);
    }

    if (!r.spanning_k_trees.empty()) {
        ordered_json kt = ordered_json::object();
        for (const auto& [k, w] : r.spanning_k_trees) {
            ordered_json wj;
            wj["exists"] = w.exists;
            if (w.exists) {
                wj["max_degree"] = w.max_degree;
                ordered_json edges = ordered_json::array();
                for (const auto& [u, v] : w.tree_edges)
                    edges.push_back(ordered_json::array({u, v}));
                wj["tree_edges"] = std::move(edges);
            }
            kt[std::to_string(k)] = std::move(wj);
        }
        j["spanning_k_trees"] = std::move(kt);
    }

    if (!r.certificates.empty()) {
        ordered_json certs = ordered_json::array();
        for (const Certificate& c : r.certificates) certs.push_back(json_certificate(c));
        j["certificates"] = std::move(certs);
    }
    if (r.toughness_bounds) j["toughness_bounds"] = json_bounds(*r.toughness_bounds);
    if (r.connectivity_bounds) j["connectivity_bounds"] = json_bounds(*r.connectivity_bounds);
    j["exponential_skipped"] = r.exponential_skipped;
    return j.dump();
}

std::string to_json(const Certificate& cert) { return json_certificate(cert).dump(); }

namespace {

void append_certificate_line(std::ostringstream& os, const Certificate& c) {
    std::string params;
    if (c.k) params += "k=" + std::to_string(*c.k);
    if (c.l) params += (params.empty() ? "" : " ") + std::string("l=") + std::to_string(*c.l);
    char line[512];
    std::snprintf(line, sizeof line, "  %-18s %-10s %-18s %s", to_string(c.theorem).c_str(),
                  params.c_str(), to_string(c.status).c_str(), c.conclusion.c_str());
    os << line;
    if (c.index_used && c.lambda_at_index && c.threshold)
        os << "  [lambda_" << *c.index_used << "=" << fmt6(*c.lambda_at_index) << " vs "
           << fmt6(*c.threshold) << "]";
    os << "\n";
}

void append_bounds(std::ostringstream& os, const std::string& title, const BoundsReport& b) {
    os << title << "\n";
    for (const BoundEntry& e : b.entries) {
        char line[512];
        std::snprintf(line, sizeof line, "  %-18s %12s   %s", e.name.c_str(),
                      fmt6(e.value).c_str(), e.conclusion.c_str());
        os << line;
        if (e.implies) os << (*e.implies ? "  [fires]" : "  [does not fire]");
        os << "\n";
    }
}

std::string join_ints(const std::vector<int>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

std::string render_pretty(const AnalysisReport& r) {
    std::ostringstream os;
    os << "graph        ";
    if (!r.graph6.empty()) os << r.graph6 << "  ";
    os << "n=" << r.n << " m=" << r.m;
    if (r.degree) os << "  " << *r.degree << "-regular";
    os << (r.connected ? "  connected" : "  disconnected");
    if (r.bipartite) os << "  bipartite";
    os << "\n";

    if (r.spectrum) {
        os << "spectrum     ";
        for (int i = 0; i < r.spectrum->size(); ++i)
            os << (i ? " " : "") << fmt6(r.spectrum->values[i]);
        os << "\n";
    }
    if (r.kappa || r.kappa_prime || r.alpha) {
        os << "connectivity ";
        if (r.kappa) os << "kappa=" << *r.kappa << "  ";
        if (r.kappa_prime) os << "kappa'=" << *r.kappa_prime << "  ";
        if (r.alpha) os << "alpha=" << *r.alpha;
        os << "\n";
    }
    if (!r.kappa_l.empty()) {
        os << "kappa_l      ";
        bool first = true;
        for (const auto& [l, lc] : r.kappa_l) {
            os << (first ? "" : "  ") << "l=" << l << ": " << lc.value;
            first = false;
        }
        os << "\n";
    }
    if (r.toughness) {
        os << "toughness    ";
        if (r.toughness->infinite) {
            os << "infinite (complete graph)";
        } else {
            os << r.toughness->value.str() << " (" << fmt6(r.toughness->value.to_double())
               << ")  witness {" << join_ints(r.toughness->witness, " ") << "} -> "
               << r.toughness->witness_components << " components";
        }
        os << "\n";
    }
    if (!r.spanning_k_trees.empty()) {
        os << "k-tree       ";
        bool first = true;
        for (const auto& [k, w] : r.spanning_k_trees) {
            os << (first ? "" : "  ") << "k=" << k << ": ";
            if (w.exists)
                os << "yes (max degree " << w.max_degree << ")";
            else
                os << "no";
            first = false;
        }
        os << "\n";
    }
    if (!r.certificates.empty()) {
        os << "certificates\n";
        for (const Certificate& c : r.certificates) append_certificate_line(os, c);
    }
    if (r.toughness_bounds) append_bounds(os, "toughness bounds", *r.toughness_bounds);
    if (r.connectivity_bounds) append_bounds(os, "connectivity bounds", *r.connectivity_bounds);
    if (r.exponential_skipped) os << "note         exact oracles skipped\n";
    return os.str();
}

namespace {

struct SweepLocal {
    std::map<TheoremId, TheoremCounts> counts;
    std::vector<Violation> violations;
    long oracle_checks = 0;
};

void tally(SweepLocal& loc, TheoremId t, CertStatus s) {
    TheoremCounts& c = loc.counts[t];
    switch (s) {
        case CertStatus::Certified: ++c.certified; break;
        case CertStatus::NotApplicable: ++c.not_applicable; break;
        case CertStatus::Inconclusive: ++c.inconclusive; break;
        case CertStatus::HypothesisFailed: ++c.hypothesis_failed; break;
    }
}

// Replays every Certified conclusion for one graph against the exact
// oracles. Exact values are cached per graph so the theorem grid shares
// them.
class GraphSweep {
public:
    GraphSweep(const Graph& g, const SweepOptions& opts, SweepLocal& loc)
        : g_(g), opts_(opts), loc_(loc), in_(CertificationInputs::compute(g)) {}

    void run(const std::vector<TheoremId>& theorems) {
        for (TheoremId t : theorems) {
            switch (t) {
                case TheoremId::LConn:
                    for (const auto& [k, l] : opts_.l_conn_params) check_l_conn(k, l);
                    break;
                case TheoremId::ToughOne: check_tough_one(); break;
                case TheoremId::BiparTough: check_bipar_tough(); break;
                case TheoremId::TauFloor: check_tau_floor(); break;
                case TheoremId::BrouwerConj: check_brouwer(); break;
                case TheoremId::KTree:
                    for (int k : opts_.ktree_values) check_k_tree(k);
                    break;
                case TheoremId::EdgeConnCioaba: check_edge_conn(); break;
            }
        }
    }

private:
    bool wants_oracle(const Certificate& c) {
        if (c.status != CertStatus::Certified) return false;
        if (g_.vertex_count() > opts_.oracle_cap && !opts_.force)
            throw SizeGuardError("soundness oracle on n=" + std::to_string(g_.vertex_count()) +
                                 " exceeds the cap of " + std::to_string(opts_.oracle_cap) +
                                 "; pass --force to override");
        ++loc_.oracle_checks;
        return true;
    }

    void violation(const std::string& theorem, const std::string& detail) {
        loc_.violations.push_back({graph_tag(g_), theorem, detail});
    }

    const Toughness& exact_toughness() {
        if (!tough_) tough_ = toughness_exact(g_);
        return *tough_;
    }

    void check_l_conn(int k, int l) {
        Certificate c = certify_l_connectivity(in_, k, l, opts_.epsilon);
        tally(loc_, c.theorem, c.status);
        if (!wants_oracle(c)) return;
        LConnectivity lc = l_connectivity(g_, l);
        if (lc.value < k)
            violation("L_CONN k=" + std::to_string(k) + " l=" + std::to_string(l),
                      "kappa_" + std::to_string(l) + " = " + std::to_string(lc.value) +
                          ", certificate claimed >= " + std::to_string(k));
    }

    void check_tough_one() {
        Certificate c = certify_toughness_one(in_, opts_.epsilon);
        tally(loc_, c.theorem, c.status);
        if (!wants_oracle(c)) return;
        const Toughness& t = exact_toughness();
        if (!t.infinite && t.value < Rational(1))
            violation("TOUGH_ONE", "toughness = " + t.value.str() + ", certificate claimed >= 1");
    }

    void check_bipar_tough() {
        Certificate c = certify_bipartite_toughness(in_, opts_.epsilon);
        tally(loc_, c.theorem, c.status);
        if (!wants_oracle(c)) return;
        const Toughness& t = exact_toughness();
        if (t.infinite || t.value != Rational(1))
            violation("BIPAR_TOUGH", "toughness = " + (t.infinite ? "infinite" : t.value.str()) +
                                         ", certificate claimed exactly 1");
    }

    void check_tau_floor() {
        Certificate c = toughness_floor(in_);
        tally(loc_, c.theorem, c.status);
        if (!wants_oracle(c)) return;
        if (!c.rational_bound) {
            violation("TAU_FLOOR", "certificate carries no bound");
            return;
        }
        const Toughness& t = exact_toughness();
        if (!t.infinite && t.value < *c.rational_bound)
            violation("TAU_FLOOR", "toughness = " + t.value.str() + ", certificate claimed >= " +
                                       c.rational_bound->str());
    }

    void check_brouwer() {
        Certificate c = brouwer_conjecture_bound(in_);
        tally(loc_, c.theorem, c.status);
        if (!wants_oracle(c)) return;
        if (!c.numeric_bound) {
            violation("BROUWER_CONJ", "certificate carries no bound");
            return;
        }
        const Toughness& t = exact_toughness();
        // float slack: the bound itself is a double, the toughness is exact
        if (!t.infinite && t.value.to_double() <= *c.numeric_bound - 1e-9)
            violation("BROUWER_CONJ", "toughness = " + t.value.str() +
                                          ", certificate claimed > " + fmt6(*c.numeric_bound));
    }

    void check_k_tree(int k) {
        Certificate c = certify_spanning_k_tree(in_, k, opts_.epsilon);
        tally(loc_, c.theorem, c.status);
        if (!wants_oracle(c)) return;
        KTreeWitness w = has_spanning_k_tree(g_, k);
        if (!w.exists)
            violation("K_TREE k=" + std::to_string(k),
                      "no spanning tree with maximum degree <= " + std::to_string(k) + " exists");
    }

    void check_edge_conn() {
        std::vector<int> ks{2};
        if (in_.degree && *in_.degree >= 2) {
            ks.clear();
            for (int k = 2; k <= *in_.degree; ++k) ks.push_back(k);
        }
        for (int k : ks) {
            Certificate c = certify_edge_connectivity(in_, k, opts_.epsilon);
            tally(loc_, c.theorem, c.status);
            if (!wants_oracle(c)) continue;
            if (!edge_conn_) edge_conn_ = edge_connectivity(g_);
            if (*edge_conn_ < k)
                violation("EDGE_CONN_CIOABA k=" + std::to_string(k),
                          "kappa' = " + std::to_string(*edge_conn_) +
                              ", certificate claimed >= " + std::to_string(k));
        }
    }

    const Graph& g_;
    const SweepOptions& opts_;
    SweepLocal& loc_;
    CertificationInputs in_;
    std::optional<Toughness> tough_;
    std::optional<int> edge_conn_;
};

}  // namespace

SweepReport run_soundness_sweep(const std::vector<Graph>& graphs, const SweepOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepReport rep;
    rep.graphs_examined = static_cast<long>(graphs.size());

    std::vector<TheoremId> theorems = opts.theorems;
    if (theorems.empty())
        theorems = {TheoremId::LConn,       TheoremId::ToughOne, TheoremId::BiparTough,
                    TheoremId::TauFloor,    TheoremId::BrouwerConj, TheoremId::KTree,
                    TheoremId::EdgeConnCioaba};
    for (TheoremId t : theorems) rep.counts[t];

    if (!graphs.empty()) {
        unsigned jobs = opts.jobs > 0 ? static_cast<unsigned>(opts.jobs)
                                      : std::max(1u, std::thread::hardware_concurrency());
        jobs = std::min<unsigned>(jobs, static_cast<unsigned>(graphs.size()));

        std::vector<SweepLocal> locals(jobs);
        std::atomic<std::size_t> next{0};
        std::atomic<bool> stop{false};
        std::mutex error_mutex;
        std::exception_ptr error;

        auto worker = [&](unsigned id) {
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= graphs.size() || stop.load()) break;
                    GraphSweep sweep(graphs[i], opts, locals[id]);
                    sweep.run(theorems);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                stop.store(true);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
        for (std::thread& th : pool) th.join();
        if (error) std::rethrow_exception(error);

        for (const SweepLocal& loc : locals) {
            for (const auto& [t, c] : loc.counts) {
                TheoremCounts& dst = rep.counts[t];
                dst.certified += c.certified;
                dst.not_applicable += c.not_applicable;
                dst.inconclusive += c.inconclusive;
                dst.hypothesis_failed += c.hypothesis_failed;
            }
            rep.oracle_checks += loc.oracle_checks;
            rep.violations.insert(rep.violations.end(), loc.violations.begin(),
                                  loc.violations.end());
        }
        std::sort(rep.violations.begin(), rep.violations.end(),
                  [](const Violation& a, const Violation& b) {
                      return std::tie(a.graph6, a.theorem, a.detail) <
                             std::tie(b.graph6, b.theorem, b.detail);
                  });
    }

    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string to_json(const SweepReport& rep) {
    ordered_json j;
    j["command"] = rep.command;
    ordered_json fams = ordered_json::array();
    for (const FamilySpec& f : rep.families) fams.push_back(family_to_string(f));
    j["families"] = std::move(fams);
    j["graphs_examined"] = rep.graphs_examined;
    j["oracle_checks"] = rep.oracle_checks;
    ordered_json counts = ordered_json::object();
    for (const auto& [t, c] : rep.counts)
        counts[to_string(t)] =
            ordered_json{{"certified", c.certified},
                         {"not_applicable", c.not_applicable},
                         {"inconclusive", c.inconclusive},
                         {"hypothesis_failed", c.hypothesis_failed}};
    j["counts"] = std::move(counts);
    ordered_json viols = ordered_json::array();
    for (const Violation& v : rep.violations)
        viols.push_back(
            ordered_json{{"graph6", v.graph6}, {"theorem", v.theorem}, {"detail", v.detail}});
    j["violations"] = std::move(viols);
    j["wall_seconds"] = rounded(rep.wall_seconds);
    return j.dump();
}

std::string render_pretty(const SweepReport& rep) {
    std::ostringstream os;
    char line[512];
    std::snprintf(line, sizeof line, "sweep        graphs=%ld  oracle_checks=%ld  wall=%.2fs\n",
                  rep.graphs_examined, rep.oracle_checks, rep.wall_seconds);
    os << line;
    for (const FamilySpec& f : rep.families) os << "family       " << family_to_string(f) << "\n";
    std::snprintf(line, sizeof line, "%-18s %10s %15s %13s %18s\n", "theorem", "certified",
                  "not-applicable", "inconclusive", "hypothesis-failed");
    os << line;
    for (const auto& [t, c] : rep.counts) {
        std::snprintf(line, sizeof line, "%-18s %10ld %15ld %13ld %18ld\n",
                      to_string(t).c_str(), c.certified, c.not_applicable, c.inconclusive,
                      c.hypothesis_failed);
        os << line;
    }
    if (rep.violations.empty()) {
        os << "violations   none\n";
    } else {
        os << "violations\n";
        for (const Violation& v : rep.violations)
            os << "  " << v.graph6 << "  " << v.theorem << "  " << v.detail << "\n";
    }
    return os.str();
}

std::vector<Graph> materialize_family(const FamilySpec& spec, bool force) {
    std::vector<Graph> out;
    switch (spec.kind) {
        case FamilySpec::Kind::Named:
            out.push_back(named_graph(spec.name, spec.params));
            break;
        case FamilySpec::Kind::RandomRegular: {
            if (spec.ns.size() != 1)
                throw std::invalid_argument("random family needs exactly one order");
            for (int i = 0; i < spec.count; ++i)
                out.push_back(random_regular(spec.ns[0], spec.d, spec.seed + i));
            break;
        }
        case FamilySpec::Kind::ExhaustiveRegular: {
            const int cap = spec.d <= 3 ? 10 : 9;
            for (int n : spec.ns) {
                if (n > cap && !force)
                    throw SizeGuardError("exhaustive enumeration of " + std::to_string(spec.d) +
                                         "-regular graphs is capped at n=" + std::to_string(cap) +
                                         "; pass --force to override");
                enumerate_connected_regular(n, spec.d,
                                            [&](const Graph& g) { out.push_back(g); });
            }
            break;
        }
        case FamilySpec::Kind::File: {
            std::ifstream f(spec.name);
            if (!f) throw std::runtime_error("cannot open graph file: " + spec.name);
            std::vector<Graph> gs = read_graphs(f);
            out.insert(out.end(), gs.begin(), gs.end());
            break;
        }
    }
    return out;
}

std::string family_to_string(const FamilySpec& spec) {
    std::ostringstream os;
    switch (spec.kind) {
        case FamilySpec::Kind::Named:
            os << "named:" << spec.name;
            if (!spec.params.empty()) os << "(" << join_ints(spec.params, ",") << ")";
            break;
        case FamilySpec::Kind::RandomRegular:
            os << "random-regular:n=" << (spec.ns.empty() ? 0 : spec.ns[0]) << ",d=" << spec.d
               << ",count=" << spec.count << ",seed=" << spec.seed;
            break;
        case FamilySpec::Kind::ExhaustiveRegular:
            os << "exhaustive-regular:d=" << spec.d << ",n={" << join_ints(spec.ns, ",") << "}";
            break;
        case FamilySpec::Kind::File:
            os << "file:" << spec.name;
            break;
    }
    return os.str();
}

}  // namespace specgraph
