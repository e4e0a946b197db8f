#include "edk/cli.hpp"

#include <fstream>
#include <memory>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "edk/bounds.hpp"
#include "edk/certificate.hpp"
#include "edk/closed_forms.hpp"
#include "edk/domination.hpp"
#include "edk/eternal.hpp"
#include "edk/families.hpp"
#include "edk/io.hpp"
#include "edk/mary.hpp"
#include "edk/tree_reductions.hpp"

namespace edk::cli {

namespace {

using nlohmann::json;

/// Input problems that map to exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Graph load_graph(const std::string& path, std::ostream& err)
{
    ParsedGraph parsed = [&] {
        try {
            return read_graph_file(path);
        } catch (const ParseError& e) {
            throw InputError(path + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw InputError(path + ": " + e.what());
        } catch (const std::runtime_error& e) {
            throw InputError(path + ": " + e.what());
        }
    }();
    for (const auto& w : parsed.warnings)
        err << path << ": warning: " << w << '\n';
    return std::move(parsed.graph);
}

std::string labels_of(const Graph& g, std::span<const Vertex> vs)
{
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i)
            out += ", ";
        out += g.label(vs[i]);
    }
    return out + "}";
}

struct Settings {
    int k = 1;
    std::string file;
    bool as_json = false;
    std::optional<int> qmin, qmax;
    std::uint64_t max_states = SolveOptions{}.max_checks;
    int threads = 1;
    bool components = false;
    std::string certificate_out;
    std::string certificate_in;
    bool solve_core = false;
    std::optional<std::uint64_t> random_order_seed;
    bool all_trees = false;
    bool exact_only = false;

    SolveOptions solve() const
    {
        SolveOptions o;
        o.q_min = qmin;
        o.q_max = qmax;
        o.max_checks = max_states;
        o.threads = threads;
        if (threads > 1)
            o.schedule = Schedule::kJacobi;
        return o;
    }
};

int cmd_gamma(const Settings& s, std::ostream& out, std::ostream& err)
{
    Graph g = load_graph(s.file, err);
    DominationResult r = gamma_k(g, s.k);
    if (s.as_json) {
        json w = json::array();
        for (Vertex v : r.witness)
            w.push_back(g.label(v));
        out << json{{"k", s.k}, {"gamma", r.gamma}, {"witness", w}}.dump() << '\n';
    } else {
        out << "gamma_" << s.k << ": " << r.gamma << '\n';
        out << "witness: " << labels_of(g, r.witness) << '\n';
    }
    return kOk;
}

void print_budget(const BudgetExceeded& e, std::ostream& out)
{
    out << "budget exceeded: " << e.what() << '\n';
    out << "bracket: " << e.lower() << " <= gamma_eternal <= ";
    if (e.upper() >= 0)
        out << e.upper();
    else
        out << "?";
    out << '\n';
}

int cmd_eternal(const Settings& s, std::ostream& out, std::ostream& err)
{
    Graph g = load_graph(s.file, err);
    try {
        if (s.components && !is_connected(g)) {
            int total = eternal_number_by_components(g, s.k, s.solve());
            out << "gamma_eternal: " << total << " (sum over " << components(g).size() << " components)\n";
            return kOk;
        }
        SolveReport report = eternal_number(g, s.k, s.solve());
        if (s.as_json) {
            json stats = json::array();
            for (const auto& st : report.per_q)
                stats.push_back({{"q", st.q}, {"states", st.states}, {"rounds", st.rounds},
                                 {"survivors", st.survivors}, {"checks", st.checks}});
            out << json{{"k", s.k}, {"gamma_eternal", report.gamma_eternal},
                        {"bounds", {report.lower_bound, report.upper_bound}}, {"per_q", stats}}
                       .dump()
                << '\n';
        } else {
            out << "gamma_eternal: " << report.gamma_eternal << '\n';
            out << "sandwich: " << report.lower_bound << " <= " << report.gamma_eternal << " <= "
                << report.upper_bound << '\n';
            for (const auto& st : report.per_q)
                out << "q=" << st.q << " states=" << st.states << " rounds=" << st.rounds
                    << " survivors=" << st.survivors << " checks=" << st.checks << '\n';
            out << "certificate: " << report.certificate.family.size() << " configurations, "
                << report.certificate.responses.size() << " responses\n";
        }
        if (!s.certificate_out.empty()) {
            std::ofstream file(s.certificate_out);
            if (!file)
                throw std::runtime_error("cannot write " + s.certificate_out);
            file << certificate_to_json(g, report.certificate).dump(1) << '\n';
        }
        return kOk;
    } catch (const BudgetExceeded& e) {
        print_budget(e, out);
        return kBudgetExceeded;
    }
}

int cmd_verify(const Settings& s, std::ostream& out, std::ostream& err)
{
    Graph g = load_graph(s.file, err);
    EternalCertificate cert;
    try {
        std::ifstream file(s.certificate_in);
        if (!file)
            throw InputError("cannot read " + s.certificate_in);
        cert = certificate_from_json(g, json::parse(file));
    } catch (const json::exception& e) {
        throw InputError(s.certificate_in + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(s.certificate_in + ": " + e.what());
    }
    VerifyResult r = verify_certificate(g, cert);
    if (r.ok) {
        out << "valid: k=" << cert.k << " q=" << cert.q << " family=" << cert.family.size() << '\n';
        return kOk;
    }
    const auto& v = *r.violation;
    out << "invalid:";
    if (v.state >= 0)
        out << " state " << v.state;
    if (v.attack >= 0 && v.attack < g.order())
        out << " attack " << g.label(v.attack);
    out << ": " << v.reason << '\n';
    return kVerifyFailed;
}

int cmd_reduce(const Settings& s, std::ostream& out, std::ostream& err)
{
    Graph g = load_graph(s.file, err);
    if (!is_tree(g)) {
        err << "reduce: input is not a tree\n";
        return kInvalidInput;
    }
    ReduceOptions options;
    options.solve_core = s.solve_core;
    options.solve = s.solve();
    std::mt19937_64 rng;
    if (s.random_order_seed) {
        rng.seed(*s.random_order_seed);
        options.random_order = &rng;
    }
    ReductionTrace trace = reduce_tree(g, s.k, options);
    out << trace_to_json(trace).dump(s.as_json ? -1 : 1) << '\n';
    return kOk;
}

int cmd_power_check(const Settings& s, std::ostream& out, std::ostream& err)
{
    Graph g = load_graph(s.file, err);
    try {
        PowerCheckReport r = power_equivalence_check(g, s.k, s.solve());
        out << (r.equal ? "equal: " : "different: ") << r.gamma_graph << (r.equal ? " = " : " != ") << r.gamma_power
            << '\n';
        out << "families: " << (r.same_families ? "identical" : "differ") << " (" << r.members_checked
            << " members checked)\n";
        if (r.mismatch)
            out << "mismatch: " << labels_of(g, r.mismatch->positions()) << " survives only on the " << r.mismatch_side
                << " side\n";
        return r.ok() ? kOk : kVerifyFailed;
    } catch (const BudgetExceeded& e) {
        print_budget(e, out);
        return kBudgetExceeded;
    }
}

int cmd_bounds(const Settings& s, std::ostream& out, std::ostream& err)
{
    Graph g = load_graph(s.file, err);
    if (g.order() == 0 || !is_connected(g)) {
        err << "bounds: graph must be connected and non-empty\n";
        return kInvalidInput;
    }
    json report;
    report["k"] = s.k;
    const int lower = gamma_k(g, s.k).gamma;
    const int upper = gamma_k(g, s.k / 2).gamma;
    report["sandwich"] = {lower, upper};
    if (auto one = diameter_rule(g, s.k))
        report["diameter_rule"] = *one;

    SpanningTreeOptions st;
    st.all_trees = s.all_trees;
    st.solve = s.solve();
    SpanningTreeBound tree_bound = spanning_tree_upper_bound(g, s.k, st);
    report["spanning_tree"] = {{"bound", tree_bound.bound}, {"trees", tree_bound.trees_tried},
                               {"exact_on_tree", tree_bound.best_exact}};

    DecompositionBound dec = decomposition_upper_bound(g, s.k);
    report["decomposition"] = {{"bound", dec.bound},
                               {"parts_k", dec.at_k.size()},
                               {"parts_half_k", dec.at_half_k.size()},
                               {"exact", dec.at_k.exact && dec.at_half_k.exact},
                               {"parts", decomposition_to_json(g, dec.at_k)}};

    int best_upper = std::min({upper, tree_bound.bound, dec.bound});
    int code = kOk;
    try {
        SolveReport solved = eternal_number(g, s.k, s.solve());
        report["gamma_eternal"] = solved.gamma_eternal;
        report["bracket"] = {solved.gamma_eternal, solved.gamma_eternal};
    } catch (const BudgetExceeded& e) {
        int hi = e.upper() >= 0 ? std::min(best_upper, e.upper()) : best_upper;
        report["bracket"] = {std::max(lower, e.lower()), hi};
        report["budget_exceeded"] = e.what();
        code = kBudgetExceeded;
    }
    if (s.as_json) {
        out << report.dump() << '\n';
        return code;
    }
    out << "gamma_" << s.k << " = " << lower << " <= gamma_eternal <= " << upper << " = gamma_" << s.k / 2 << '\n';
    if (report.contains("diameter_rule"))
        out << "diameter <= k: gamma_eternal = 1\n";
    out << "spanning tree bound: " << tree_bound.bound << " (" << tree_bound.trees_tried << " trees)\n";
    out << "decomposition bound: " << dec.bound << " = min(2*" << dec.at_k.size() << ", " << dec.at_half_k.size()
        << ")" << (dec.at_k.exact && dec.at_half_k.exact ? "" : " [greedy]") << '\n';
    if (report.contains("gamma_eternal"))
        out << "gamma_eternal: " << report["gamma_eternal"].get<int>() << '\n';
    else
        out << "budget exceeded; bracket: " << report["bracket"][0].get<int>() << " <= gamma_eternal <= "
            << report["bracket"][1].get<int>() << '\n';
    return code;
}

void emit_graph(const Graph& g, bool dot, std::ostream& out)
{
    out << (dot ? write_dot(g) : write_edge_list(g));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Eternal distance-k domination solver"};
    app.require_subcommand(1);
    Settings s;

    auto graph_command = [&](const std::string& name, const std::string& about, bool with_solver) {
        CLI::App* sub = app.add_subcommand(name, about);
        sub->add_option("-k", s.k, "distance")->required()->check(CLI::PositiveNumber);
        sub->add_option("file", s.file, "edge list or DOT file")->required();
        sub->add_flag("--json", s.as_json, "machine-readable output");
        if (with_solver) {
            sub->add_option("--qmin", s.qmin, "smallest size to try");
            sub->add_option("--qmax", s.qmax, "largest size to try");
            sub->add_option("--max-states", s.max_states, "cap on (state, attack) checks per size");
            sub->add_option("--threads", s.threads, "worker threads for elimination rounds")
                ->check(CLI::PositiveNumber);
        }
        return sub;
    };

    CLI::App* gamma = graph_command("gamma", "distance-k domination number and witness", false);
    CLI::App* eternal = graph_command("eternal", "exact eternal distance-k number", true);
    eternal->add_option("--certificate", s.certificate_out, "write the certificate as JSON");
    eternal->add_flag("--components", s.components, "sum over components of a disconnected graph");
    CLI::App* reduce = graph_command("reduce", "tree reductions and the resulting bracket (JSON)", true);
    reduce->add_flag("--solve-core", s.solve_core, "solve the core exactly when within budget");
    reduce->add_option("--random-order", s.random_order_seed, "pick reductions at random with this seed");
    CLI::App* power = graph_command("power-check", "compare G at distance k with G^k at distance 1", true);
    CLI::App* bounds = graph_command("bounds", "sandwich, spanning-tree and decomposition bounds", true);
    bounds->add_flag("--all-trees", s.all_trees, "enumerate every spanning tree (n <= 8)");

    CLI::App* verify = app.add_subcommand("verify", "check a certificate against a graph");
    verify->add_option("certificate", s.certificate_in, "certificate JSON")->required();
    verify->add_option("file", s.file, "graph file")->required();

    CLI::App* closed = app.add_subcommand("closed-form", "closed-form values");
    closed->require_subcommand(1);
    int n = 0, m = 0, d = 0, k = 0, z = 0;
    CLI::App* cf_path = closed->add_subcommand("path", "ceil(n/(k+1))");
    cf_path->add_option("n", n)->required();
    cf_path->add_option("k", k)->required();
    CLI::App* cf_cycle = closed->add_subcommand("cycle", "ceil(n/(2k+1))");
    cf_cycle->add_option("n", n)->required();
    cf_cycle->add_option("k", k)->required();
    CLI::App* cf_mary = closed->add_subcommand("mary", "perfect m-ary tree of depth d");
    cf_mary->add_option("m", m)->required();
    cf_mary->add_option("d", d)->required();
    cf_mary->add_option("k", k)->required();

    CLI::App* gen = app.add_subcommand("gen", "emit a named graph as an edge list");
    gen->require_subcommand(1);
    bool dot = false;
    std::uint64_t seed = 1;
    double p = 0.3;
    std::vector<int> legs;
    gen->add_flag("--dot", dot, "emit DOT instead of an edge list");
    CLI::App* g_path = gen->add_subcommand("path", "P_n");
    g_path->add_option("n", n)->required()->check(CLI::PositiveNumber);
    CLI::App* g_cycle = gen->add_subcommand("cycle", "C_n");
    g_cycle->add_option("n", n)->required()->check(CLI::Range(3, 1 << 20));
    CLI::App* g_mary = gen->add_subcommand("mary", "perfect m-ary tree");
    g_mary->add_option("m", m)->required()->check(CLI::Range(2, 1 << 20));
    g_mary->add_option("d", d)->required()->check(CLI::NonNegativeNumber);
    CLI::App* g_spider = gen->add_subcommand("spider", "center with legs of the given lengths");
    g_spider->add_option("legs", legs)->required();
    CLI::App* g_pnl = gen->add_subcommand("pnl", "path of z(k+1) vertices with n - z(k+1) leaves");
    g_pnl->add_option("n", n)->required();
    g_pnl->add_option("k", k)->required();
    g_pnl->add_option("z", z)->required();
    CLI::App* g_substar = gen->add_subcommand("substar", "K_{1,n} with each edge subdivided k-1 times");
    g_substar->add_option("n", n)->required();
    g_substar->add_option("k", k)->required();
    CLI::App* g_tree = gen->add_subcommand("random-tree", "uniform random labelled tree");
    g_tree->add_option("n", n)->required()->check(CLI::PositiveNumber);
    g_tree->add_option("--seed", seed, "random seed");
    CLI::App* g_random = gen->add_subcommand("random", "random connected graph");
    g_random->add_option("n", n)->required()->check(CLI::PositiveNumber);
    g_random->add_option("-p", p, "extra edge probability")->check(CLI::Range(0.0, 1.0));
    g_random->add_option("--seed", seed, "random seed");

    std::vector<std::string> argv_store{"edk"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }

    try {
        if (*gamma)
            return cmd_gamma(s, out, err);
        if (*eternal)
            return cmd_eternal(s, out, err);
        if (*verify)
            return cmd_verify(s, out, err);
        if (*reduce)
            return cmd_reduce(s, out, err);
        if (*power)
            return cmd_power_check(s, out, err);
        if (*bounds)
            return cmd_bounds(s, out, err);
        if (*closed) {
            if (*cf_path)
                out << path_number(n, k) << '\n';
            else if (*cf_cycle)
                out << cycle_number(n, k) << '\n';
            else {
                MaryPiecewise r = mary_number_piecewise(m, d, k);
                out << "recursive: " << r.recursive << '\n';
                out << "piecewise: " << r.value << " (case " << r.branch << ")\n";
                out << (r.consistent ? "consistent\n" : "INCONSISTENT: the two forms disagree at q = k/2\n");
            }
            return kOk;
        }
        if (*gen) {
            Graph g;
            std::mt19937_64 rng(seed);
            if (*g_path)
                g = make_path(n);
            else if (*g_cycle)
                g = make_cycle(n);
            else if (*g_mary)
                g = build_perfect_mary({m, d});
            else if (*g_spider)
                g = make_spider(legs);
            else if (*g_pnl)
                g = make_p_n_ell(n, k, z);
            else if (*g_substar)
                g = make_subdivided_star(n, k);
            else if (*g_tree)
                g = random_tree(n, rng);
            else
                g = random_connected_graph(n, p, rng);
            emit_graph(g, dot, out);
            return kOk;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kParseError;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kParseError;
}

}  // namespace edk::cli
