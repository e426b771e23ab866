// specgraph: spectral certificates for connectivity, toughness, and bounded
// degree spanning trees of regular graphs, cross-checked by exact oracles.
//
// Subcommands: analyze | certify | construct | verify | spectrum.
// JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success, 2 input
// error, 3 size guard, 4 soundness violation (verify only).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "specgraph/certificates.hpp"
#include "specgraph/constructions.hpp"
#include "specgraph/formats.hpp"
#include "specgraph/report.hpp"

namespace {

using nlohmann::ordered_json;
using namespace specgraph;

std::string join_argv(int argc, char** argv) {
    std::string out;
    for (int i = 0; i < argc; ++i) {
        if (i) out += ' ';
        out += argv[i];
    }
    return out;
}

// `input` is a file path, "-" (or empty) for stdin, or a literal graph6
// string; whichever parses wins, files first.
std::vector<Graph> load_input(const std::string& input) {
    if (input.empty() || input == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return read_graphs(buf.str());
    }
    std::ifstream f(input);
    if (f) return read_graphs(f);
    try {
        return read_graphs(std::string_view(input));
    } catch (const ParseError&) {
        throw std::invalid_argument("input is neither a readable file nor a parseable graph: " +
                                    input);
    }
}

Rational parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: " + text);
    }
}

ordered_json graph_header(const Graph& g) {
    ordered_json j;
    if (g.vertex_count() <= 62) j["graph6"] = to_graph6(g);
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    if (auto d = regular_degree(g)) j["degree"] = *d;
    j["connected"] = is_connected(g);
    j["bipartite"] = bipartition(g).has_value();
    return j;
}

struct AnalyzeArgs {
    std::string input = "-";
    AnalyzeOptions opts;
    bool pretty = false;
};

int run_analyze(const AnalyzeArgs& args, const std::string& command) {
    for (const Graph& g : load_input(args.input)) {
        AnalysisReport rep = analyze_graph(g, args.opts);
        rep.command = command;
        if (args.pretty)
            std::cout << render_pretty(rep) << "\n";
        else
            std::cout << to_json(rep) << "\n";
    }
    return 0;
}

struct CertifyArgs {
    std::string input = "-";
    std::vector<std::string> theorems;
    std::optional<int> k;
    std::optional<int> l;
    std::string tau;
    double epsilon = kDefaultEpsilon;
    bool pretty = false;
};

int run_certify(const CertifyArgs& args, const std::string& command) {
    std::vector<TheoremId> selected;
    if (args.theorems.empty()) {
        selected = {TheoremId::LConn,       TheoremId::ToughOne,    TheoremId::BiparTough,
                    TheoremId::TauFloor,    TheoremId::BrouwerConj, TheoremId::KTree,
                    TheoremId::EdgeConnCioaba};
    } else {
        for (const std::string& name : args.theorems) {
            auto id = theorem_from_cli_name(name);
            if (!id) throw std::invalid_argument("unknown theorem: " + name);
            selected.push_back(*id);
        }
    }
    std::optional<Rational> tau;
    if (!args.tau.empty()) {
        tau = parse_rational(args.tau);
        if (tau->num() <= 0) throw std::invalid_argument("--tau must be positive");
    }

    for (const Graph& g : load_input(args.input)) {
        const CertificationInputs in = CertificationInputs::compute(g);
        std::vector<Certificate> certs;
        for (TheoremId id : selected) {
            switch (id) {
                case TheoremId::LConn:
                    certs.push_back(certify_l_connectivity(in, args.k.value_or(2),
                                                           args.l.value_or(2), args.epsilon));
                    break;
                case TheoremId::ToughOne:
                    certs.push_back(certify_toughness_one(in, args.epsilon));
                    break;
                case TheoremId::BiparTough:
                    certs.push_back(certify_bipartite_toughness(in, args.epsilon));
                    break;
                case TheoremId::TauFloor:
                    certs.push_back(toughness_floor(in, tau));
                    break;
                case TheoremId::BrouwerConj:
                    certs.push_back(brouwer_conjecture_bound(in));
                    break;
                case TheoremId::KTree:
                    certs.push_back(
                        certify_spanning_k_tree(in, args.k.value_or(3), args.epsilon));
                    break;
                case TheoremId::EdgeConnCioaba:
                    certs.push_back(
                        certify_edge_connectivity(in, args.k.value_or(2), args.epsilon));
                    break;
            }
        }
        if (args.pretty) {
            std::cout << "graph " << (g.vertex_count() <= 62 ? to_graph6(g) : "") << " n="
                      << g.vertex_count() << " m=" << g.edge_count() << "\n";
            for (const Certificate& c : certs) {
                std::cout << "  " << to_string(c.theorem);
                if (c.k) std::cout << " k=" << *c.k;
                if (c.l) std::cout << " l=" << *c.l;
                std::cout << "  " << to_string(c.status) << "  " << c.conclusion << "\n";
            }
        } else {
            ordered_json j;
            j["command"] = command;
            j["graph"] = graph_header(g);
            ordered_json arr = ordered_json::array();
            for (const Certificate& c : certs) arr.push_back(ordered_json::parse(to_json(c)));
            j["certificates"] = std::move(arr);
            std::cout << j.dump() << "\n";
        }
    }
    return 0;
}

struct ConstructArgs {
    std::string name;
    std::optional<int> d, t, n, a, b, dim, leaves;
    std::vector<int> params;
    int count = 1;
    std::uint64_t seed = 0;
};

int run_construct(const ConstructArgs& args) {
    std::vector<Graph> out;
    if (args.name == "x-graph") {
        if (!args.d) throw std::invalid_argument("x-graph needs --d");
        out.push_back(x_graph(*args.d));
    } else if (args.name == "gadget-4regular") {
        out.push_back(gadget_4regular());
    } else if (args.name == "matching-complement") {
        if (!args.t) throw std::invalid_argument("matching-complement needs --t");
        out.push_back(matching_complement(*args.t));
    } else if (args.name == "random-regular") {
        if (!args.n || !args.d) throw std::invalid_argument("random-regular needs --n and --d");
        for (int i = 0; i < args.count; ++i)
            out.push_back(random_regular(*args.n, *args.d, args.seed + static_cast<unsigned>(i)));
    } else {
        std::vector<int> params = args.params;
        if (params.empty()) {
            if (args.name == "complete-bipartite") {
                if (!args.a || !args.b)
                    throw std::invalid_argument("complete-bipartite needs --a and --b");
                params = {*args.a, *args.b};
            } else if (args.name == "hypercube" && args.dim) {
                params = {*args.dim};
            } else if (args.name == "star" && args.leaves) {
                params = {*args.leaves};
            } else if (args.n) {
                params = {*args.n};
            }
        }
        out.push_back(named_graph(args.name, params));
    }
    for (const Graph& g : out) {
        if (g.vertex_count() > 62)
            throw std::invalid_argument("constructed graph has n > 62; no graph6 form");
        std::cout << to_graph6(g) << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::optional<int> exhaustive_d;
    std::vector<int> exhaustive_n;
    std::optional<int> random_n, random_d;
    int count = 0;
    std::uint64_t seed = 0;
    std::string named;
    std::vector<int> named_params;
    std::string file;
    std::vector<std::string> theorems;
    SweepOptions opts;
    bool pretty = false;
};

int run_verify(const VerifyArgs& args, const std::string& command) {
    std::vector<FamilySpec> families;
    if (args.exhaustive_d) {
        if (args.exhaustive_n.empty())
            throw std::invalid_argument("--exhaustive-d needs --exhaustive-n");
        FamilySpec f;
        f.kind = FamilySpec::Kind::ExhaustiveRegular;
        f.d = *args.exhaustive_d;
        f.ns = args.exhaustive_n;
        families.push_back(f);
    }
    if (args.random_n || args.random_d || args.count > 0) {
        if (!args.random_n || !args.random_d || args.count <= 0)
            throw std::invalid_argument("random family needs --random-n, --random-d, --count");
        FamilySpec f;
        f.kind = FamilySpec::Kind::RandomRegular;
        f.ns = {*args.random_n};
        f.d = *args.random_d;
        f.count = args.count;
        f.seed = args.seed;
        families.push_back(f);
    }
    if (!args.named.empty()) {
        FamilySpec f;
        f.kind = FamilySpec::Kind::Named;
        f.name = args.named;
        f.params = args.named_params;
        families.push_back(f);
    }
    if (!args.file.empty()) {
        FamilySpec f;
        f.kind = FamilySpec::Kind::File;
        f.name = args.file;
        families.push_back(f);
    }
    if (families.empty())
        throw std::invalid_argument(
            "verify needs a family: --exhaustive-d/--exhaustive-n, --random-n/--random-d/--count, "
            "--named, or --file");

    SweepOptions opts = args.opts;
    for (const std::string& name : args.theorems) {
        auto id = theorem_from_cli_name(name);
        if (!id) throw std::invalid_argument("unknown theorem: " + name);
        opts.theorems.push_back(*id);
    }

    std::vector<Graph> graphs;
    for (const FamilySpec& f : families) {
        std::vector<Graph> gs = materialize_family(f, opts.force);
        graphs.insert(graphs.end(), gs.begin(), gs.end());
    }

    SweepReport rep = run_soundness_sweep(graphs, opts);
    rep.command = command;
    rep.families = families;
    if (args.pretty)
        std::cout << render_pretty(rep);
    else
        std::cout << to_json(rep) << "\n";
    if (!rep.violations.empty()) {
        std::cerr << "soundness violations: " << rep.violations.size() << "\n";
        return 4;
    }
    return 0;
}

struct SpectrumArgs {
    std::string input = "-";
    bool pretty = false;
};

int run_spectrum(const SpectrumArgs& args, const std::string& command) {
    for (const Graph& g : load_input(args.input)) {
        Spectrum sp = adjacency_spectrum(g);
        if (args.pretty) {
            for (int i = 0; i < sp.size(); ++i) {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.12g", sp.values[i]);
                std::cout << (i ? " " : "") << buf;
            }
            std::cout << "\n";
        } else {
            ordered_json j;
            j["command"] = command;
            j["graph"] = graph_header(g);
            ordered_json values = ordered_json::array();
            for (double v : sp.values) {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.12g", v);
                values.push_back(std::strtod(buf, nullptr));
            }
            j["spectrum"] = ordered_json{{"values", std::move(values)},
                                         {"tolerance", sp.tolerance}};
            std::cout << j.dump() << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral certificates for regular graphs, with exact oracle cross-checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "specgraph 1.0.0");
    const std::string command = join_argv(argc, argv);

    AnalyzeArgs an;
    CLI::App* analyze = app.add_subcommand(
        "analyze", "full report: spectrum, connectivity, toughness, trees, certificates");
    analyze->add_option("input", an.input, "file, '-' for stdin, or a literal graph6 string");
    analyze->add_flag("--skip-exponential", an.opts.skip_exponential,
                      "omit toughness/kappa_l/alpha/k-tree oracles");
    analyze->add_flag("--force", an.opts.force, "ignore the size caps");
    analyze->add_flag("--pretty", an.pretty, "table output instead of JSON");
    analyze->add_option("--epsilon", an.opts.epsilon, "spectral comparison margin");
    analyze->add_option("--kappa-l", an.opts.kappa_l_values, "l values for kappa_l (default 2..alpha)");
    analyze->add_option("--ktree", an.opts.ktree_values, "k values for the spanning tree search");
    analyze->add_option("--lconn-k", an.opts.lconn_k, "k for the l-connectivity certificate");
    analyze->add_option("--lconn-l", an.opts.lconn_l, "l for the l-connectivity certificate");
    analyze->add_option("--exponential-cap", an.opts.exponential_cap,
                        "largest n for toughness/kappa_l/alpha");
    analyze->add_option("--ktree-cap", an.opts.ktree_cap, "largest n for the tree search");

    CertifyArgs ce;
    CLI::App* certify = app.add_subcommand(
        "certify", "spectral certificates only, no exponential oracles");
    certify->add_option("input", ce.input, "file, '-' for stdin, or a literal graph6 string");
    certify->add_option("--theorem", ce.theorems,
                        "l-conn | tough-one | bipar-tough | tau-floor | brouwer-conj | k-tree | "
                        "edge-conn (default: all)");
    certify->add_option("--k", ce.k, "k parameter (l-conn, k-tree, edge-conn)");
    certify->add_option("--l", ce.l, "l parameter (l-conn)");
    certify->add_option("--tau", ce.tau, "rational p/q for tau-floor");
    certify->add_option("--epsilon", ce.epsilon, "spectral comparison margin");
    certify->add_flag("--pretty", ce.pretty, "table output instead of JSON");

    ConstructArgs co;
    CLI::App* construct = app.add_subcommand("construct", "emit named graphs as graph6 lines");
    construct
        ->add_option("name", co.name,
                     "x-graph | gadget-4regular | matching-complement | random-regular | cycle | "
                     "path | complete | complete-bipartite | petersen | hypercube | star")
        ->required();
    construct->add_option("--d", co.d, "degree (x-graph, random-regular)");
    construct->add_option("--t", co.t, "order (matching-complement)");
    construct->add_option("--n", co.n, "order");
    construct->add_option("--a", co.a, "first side (complete-bipartite)");
    construct->add_option("--b", co.b, "second side (complete-bipartite)");
    construct->add_option("--dim", co.dim, "dimension (hypercube)");
    construct->add_option("--leaves", co.leaves, "leaf count (star)");
    construct->add_option("--params", co.params, "raw integer parameters");
    construct->add_option("--count", co.count, "graphs to draw (random-regular)");
    construct->add_option("--seed", co.seed, "seed (random-regular)");

    VerifyArgs ve;
    CLI::App* verify = app.add_subcommand(
        "verify", "soundness sweep: replay every Certified conclusion against exact oracles");
    verify->add_option("--exhaustive-d", ve.exhaustive_d, "degree for exhaustive enumeration");
    verify->add_option("--exhaustive-n", ve.exhaustive_n, "orders for exhaustive enumeration");
    verify->add_option("--random-n", ve.random_n, "order for the random family");
    verify->add_option("--random-d", ve.random_d, "degree for the random family");
    verify->add_option("--count", ve.count, "random graphs to draw");
    verify->add_option("--seed", ve.seed, "seed for the random family");
    verify->add_option("--named", ve.named, "single named graph");
    verify->add_option("--named-params", ve.named_params, "parameters for --named");
    verify->add_option("--file", ve.file, "graph6 or edge-list file");
    verify->add_option("--theorem", ve.theorems, "theorems to sweep (default: all)");
    verify->add_option("--jobs", ve.opts.jobs, "worker threads (default: hardware)");
    verify->add_option("--oracle-cap", ve.opts.oracle_cap, "largest n the oracles accept");
    verify->add_option("--epsilon", ve.opts.epsilon, "spectral comparison margin");
    verify->add_option("--ktree", ve.opts.ktree_values, "k values for the K_TREE sweep");
    verify->add_flag("--force", ve.opts.force, "ignore size caps");
    verify->add_flag("--pretty", ve.pretty, "table output instead of JSON");

    SpectrumArgs sp;
    CLI::App* spectrum = app.add_subcommand("spectrum", "adjacency eigenvalues only");
    spectrum->add_option("input", sp.input, "file, '-' for stdin, or a literal graph6 string");
    spectrum->add_flag("--pretty", sp.pretty, "plain values instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(an, command);
        if (certify->parsed()) return run_certify(ce, command);
        if (construct->parsed()) return run_construct(co);
        if (verify->parsed()) return run_verify(ve, command);
        if (spectrum->parsed()) return run_spectrum(sp, command);
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << " (offset " << e.offset() << ")\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
