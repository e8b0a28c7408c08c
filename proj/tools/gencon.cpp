// gencon: command-line front end for the generalized connectivity toolkit.
//
// Exit codes: 0 decided or exact, 2 budget exhausted, 1 usage or validation error.

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "gencon/graph_io.hpp"
#include "gencon/harness.hpp"
#include "gencon/random.hpp"
#include "gencon/reductions.hpp"
#include "gencon/solver.hpp"
#include "gencon/steiner.hpp"

using namespace gencon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBudget = 2;

struct Options {
    std::string graph;
    std::string terminals;
    std::string in;
    std::string out;
    std::string dot;
    std::optional<int> k;
    std::optional<int> k1;
    std::optional<std::uint64_t> budget;
    std::uint64_t seed = 1;
    int count = 1;
    bool json = false;
    // generator parameters
    int n = 2;
    int m = 3;
    int vars = 3;
    int clauses = 5;
    int order = 8;
    double prob = 0.4;
};

// A --graph file holds either a plain graph or a reduced instance, which
// also supplies terminals and a threshold.
struct Loaded {
    Graph graph;
    std::optional<TerminalSet> terminals;
    std::optional<int> threshold;
};

Loaded load_graph(const Options& o) {
    if (o.graph.empty()) throw Error("--graph is required");
    std::string text = read_file(o.graph);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(o.graph + ": invalid JSON at byte " + std::to_string(e.byte));
    }
    Loaded l;
    if (j.is_object() && j.contains("graph")) {
        ReducedInstance r = reduced_from_json(j);
        l.graph = r.graph;
        l.terminals = r.terminals;
        l.threshold = r.threshold;
    } else {
        l.graph = graph_from_json(j);
    }
    if (!o.terminals.empty()) l.terminals = parse_terminal_list(l.graph, o.terminals);
    return l;
}

TerminalSet need_terminals(const Loaded& l) {
    if (!l.terminals) throw Error("--terminals is required");
    return *l.terminals;
}

int need_k(const Options& o, const Loaded& l) {
    if (o.k) return *o.k;
    if (l.threshold) return *l.threshold;
    throw Error("--k is required");
}

Budget budget_of(const Options& o) {
    std::uint64_t b = Budget{}.expansions;
    if (const char* env = std::getenv("KAPPA_BUDGET")) {
        std::string s(env);
        std::size_t used = 0;
        try {
            b = std::stoull(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw Error("KAPPA_BUDGET must be a positive integer, got \"" + s + "\"");
    }
    if (o.budget) b = *o.budget;
    if (b == 0) throw Error("budget must be positive");
    return Budget{b};
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty())
        std::cout << text;
    else
        write_file(path, text);
}

std::string csv(const std::vector<VertexId>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string tree_line(const Tree& t) {
    std::string s;
    for (const Edge& e : t.edges) s += (s.empty() ? "" : " ") + std::to_string(e.u) + "-" + std::to_string(e.v);
    return s;
}

void print_trees(const TreeCertificate& cert) {
    for (std::size_t i = 0; i < cert.trees.size(); ++i)
        std::cout << "tree " << i << ": " << tree_line(cert.trees[i]) << "\n";
}

void write_dot(const Options& o, const Graph& g, const std::optional<TerminalSet>& s) {
    if (!o.dot.empty()) write_file(o.dot, export_dot(g, s));
}

const char* decision_name(Decision d) {
    switch (d) {
        case Decision::certificate: return "certificate";
        case Decision::refuted: return "refuted";
        case Decision::unknown: return "unknown";
    }
    return "unknown";
}

// ---------------------------------------------------------------- solver commands

int cmd_kappa(const Options& o) {
    Loaded l = load_graph(o);
    TerminalSet s = need_terminals(l);
    SolveResult r = kappa_set_exact(l.graph, s, budget_of(o));
    write_dot(o, l.graph, s);
    if (!o.out.empty()) write_file(o.out, certificate_to_json(r.certificate).dump() + "\n");
    const bool exact = r.status == SolveStatus::exact;
    if (o.json) {
        json j;
        j["value"] = r.value;
        j["status"] = exact ? "exact" : "lower-bound";
        j["upper_bound"] = r.upper_bound;
        j["expansions"] = r.expansions;
        j["certificate"] = certificate_to_json(r.certificate);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "value " << r.value << "\n";
        std::cout << "status " << (exact ? "exact" : "lower-bound") << "\n";
        std::cout << "upper_bound " << r.upper_bound << "\n";
        std::cout << "expansions " << r.expansions << "\n";
        if (o.out.empty())
            print_trees(r.certificate);
        else
            std::cout << "certificate " << o.out << "\n";
    }
    return exact ? kExitOk : kExitBudget;
}

int cmd_kappa_k(const Options& o) {
    Loaded l = load_graph(o);
    if (!o.k) throw Error("--k is required");
    KappaKResult r = kappa_k_graph(l.graph, *o.k, budget_of(o));
    if (o.json) {
        json j;
        j["value"] = r.value;
        j["status"] = r.exact ? "exact" : "upper-bound";
        j["subset"] = r.subset;
        j["expansions"] = r.expansions;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "value " << r.value << "\n";
        std::cout << "status " << (r.exact ? "exact" : "upper-bound") << "\n";
        std::cout << "subset " << csv(r.subset) << "\n";
        std::cout << "expansions " << r.expansions << "\n";
    }
    return r.exact ? kExitOk : kExitBudget;
}

int cmd_decide(const Options& o) {
    Loaded l = load_graph(o);
    TerminalSet s = need_terminals(l);
    const int k = need_k(o, l);
    DecideResult r = decide_kappa_at_least(l.graph, s, k, budget_of(o));
    write_dot(o, l.graph, s);
    if (!o.out.empty() && r.decision == Decision::certificate)
        write_file(o.out, certificate_to_json(r.certificate).dump() + "\n");
    if (o.json) {
        json j;
        j["k"] = k;
        j["decision"] = decision_name(r.decision);
        j["expansions"] = r.expansions;
        if (r.decision == Decision::certificate) j["certificate"] = certificate_to_json(r.certificate);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "k " << k << "\n";
        std::cout << "decision " << decision_name(r.decision) << "\n";
        std::cout << "expansions " << r.expansions << "\n";
        if (r.decision == Decision::certificate) {
            if (o.out.empty())
                print_trees(r.certificate);
            else
                std::cout << "certificate " << o.out << "\n";
        }
    }
    return r.decision == Decision::unknown ? kExitBudget : kExitOk;
}

int cmd_verify(const Options& o) {
    Loaded l = load_graph(o);
    TerminalSet s = need_terminals(l);
    if (o.in.empty()) throw Error("--in (certificate file) is required");
    TreeCertificate cert = parse_certificate(read_file(o.in));
    VerifyReport r = verify_certificate(l.graph, s, cert);
    if (o.json) {
        json j;
        j["valid"] = r.valid;
        j["trees"] = cert.size();
        j["violations"] = r.violations;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << (r.valid ? "valid" : "invalid") << "\n";
        std::cout << "trees " << cert.size() << "\n";
        for (const auto& v : r.violations) std::cout << "violation " << v << "\n";
    }
    return r.valid ? kExitOk : kExitError;
}

int cmd_classify(const Options& o) {
    Loaded l = load_graph(o);
    TerminalSet s = need_terminals(l);
    std::map<std::string, std::size_t> hist;
    if (!o.in.empty()) {
        TreeCertificate cert = parse_certificate(read_file(o.in));
        for (const Tree& t : cert.trees) ++hist[classify_topology(t, s).code];
    } else {
        hist = topology_histogram(l.graph, s);
    }
    if (o.json) {
        json j;
        j["types"] = hist.size();
        j["histogram"] = hist;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "types " << hist.size() << "\n";
        for (const auto& [code, n] : hist) std::cout << code << " " << n << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- constructions

int report_reduced(const Options& o, const ReducedInstance& r) {
    const std::string text = serialize_reduced(r) + "\n";
    if (!o.out.empty()) write_file(o.out, text);
    if (!o.dot.empty()) write_file(o.dot, export_dot(labelled_by_roles(r), r.terminals));
    if (o.json) {
        std::cout << text;
    } else {
        std::cout << "vertices " << r.graph.order() << "\n";
        std::cout << "edges " << r.graph.edge_count() << "\n";
        std::cout << "terminals " << csv(r.terminals.members()) << "\n";
        std::cout << "threshold " << r.threshold << "\n";
        if (!o.out.empty()) std::cout << "instance " << o.out << "\n";
    }
    return kExitOk;
}

ThreeDMInstance load_3dm(const Options& o) {
    if (o.in.empty()) throw Error("--in is required");
    return parse_3dm(read_file(o.in));
}

CnfFormula load_cnf(const Options& o) {
    if (o.in.empty()) throw Error("--in is required");
    return parse_dimacs(read_file(o.in));
}

int cmd_reduce_3dm(const Options& o) { return report_reduced(o, reduce_3dm(load_3dm(o))); }
int cmd_reduce_3sat(const Options& o) { return report_reduced(o, reduce_3sat(load_cnf(o))); }

int cmd_lift(const Options& o) {
    Loaded l = load_graph(o);
    TerminalSet s = need_terminals(l);
    if (!o.k1) throw Error("--k1 is required");
    return report_reduced(o, lift_terminals(l.graph, s, *o.k1, need_k(o, l)));
}

int cmd_pad(const Options& o) {
    Loaded l = load_graph(o);
    TerminalSet s = need_terminals(l);
    if (!o.k) throw Error("--k is required");
    return report_reduced(o, pad_tree_count(l.graph, s, *o.k));
}

// ---------------------------------------------------------------- oracles

int cmd_oracle_3dm(const Options& o) {
    ThreeDMInstance inst = load_3dm(o);
    auto m = solve_3dm_brute(inst);
    if (o.json) {
        json j;
        j["matching"] = m ? json(m->chosen) : json(nullptr);
        std::cout << j.dump() << "\n";
    } else if (m) {
        std::cout << "matching " << csv(m->chosen) << "\n";
    } else {
        std::cout << "none\n";
    }
    return kExitOk;
}

int cmd_oracle_sat(const Options& o) {
    CnfFormula phi = load_cnf(o);
    auto a = solve_sat_brute(phi);
    std::vector<int> lits;
    if (a)
        for (int i = 0; i < phi.num_vars; ++i) lits.push_back(a->values[i] ? i + 1 : -(i + 1));
    if (o.json) {
        json j;
        j["satisfiable"] = a.has_value();
        if (a) j["assignment"] = lits;
        std::cout << j.dump() << "\n";
    } else if (a) {
        std::string s;
        for (int v : lits) s += (s.empty() ? "" : " ") + std::to_string(v);
        std::cout << "sat " << s << "\n";
    } else {
        std::cout << "unsat\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- round trips and generators

int report_roundtrip(const Options& o, const RoundtripReport& r) {
    if (o.json) {
        json j;
        j["instances"] = r.total();
        j["agree"] = r.agree();
        j["yes"] = r.yes;
        j["no"] = r.no;
        j["disagree"] = r.disagree;
        j["unknown"] = r.unknown;
        j["errors"] = r.errors;
        j["witness_failures"] = r.witness_failures;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "instances " << r.total() << "\n";
        std::cout << "agree " << r.agree() << "/" << r.total() << "\n";
        std::cout << "yes/yes " << r.yes << "\n";
        std::cout << "no/no " << r.no << "\n";
        std::cout << "disagree " << r.disagree << "\n";
        std::cout << "unknown " << r.unknown << "\n";
        std::cout << "errors " << r.errors << "\n";
        std::cout << "witness_failures " << r.witness_failures << "\n";
        for (int i = 0; i < r.total(); ++i) {
            const auto& oc = r.outcomes[i];
            if (!oc.error.empty()) std::cout << "instance " << i << " error: " << oc.error << "\n";
            else if (!oc.unknown() && !oc.agrees()) std::cout << "instance " << i << " disagrees\n";
        }
    }
    if (!r.ok()) return kExitError;
    return r.unknown > 0 ? kExitBudget : kExitOk;
}

void need_count(const Options& o) {
    if (o.count < 1) throw Error("--count must be at least 1");
}

int cmd_roundtrip_3dm(const Options& o) {
    need_count(o);
    if (o.m < o.n) throw Error("--m must be at least --n");
    Rng rng(o.seed);
    std::vector<ThreeDMInstance> batch;
    for (int i = 0; i < o.count; ++i) batch.push_back(random_3dm(o.n, o.m, rng));
    return report_roundtrip(o, roundtrip_3dm(batch, budget_of(o)));
}

int cmd_roundtrip_3sat(const Options& o) {
    need_count(o);
    Rng rng(o.seed);
    std::vector<CnfFormula> batch;
    for (int i = 0; i < o.count; ++i) batch.push_back(random_cnf(o.vars, o.clauses, rng));
    return report_roundtrip(o, roundtrip_3sat(batch, budget_of(o)));
}

int cmd_gen_graph(const Options& o) {
    Rng rng(o.seed);
    emit(serialize_graph(random_graph(o.order, o.prob, rng)) + "\n", o.out);
    return kExitOk;
}

int cmd_gen_3dm(const Options& o) {
    Rng rng(o.seed);
    emit(threedm_to_json(random_3dm(o.n, o.m, rng)).dump() + "\n", o.out);
    return kExitOk;
}

int cmd_gen_cnf(const Options& o) {
    Rng rng(o.seed);
    emit(write_dimacs(random_cnf(o.vars, o.clauses, rng)), o.out);
    return kExitOk;
}

// ---------------------------------------------------------------- option wiring

void add_graph(CLI::App* c, Options& o, bool terminals = true) {
    c->add_option("--graph", o.graph, "graph JSON or reduced-instance JSON");
    if (terminals) c->add_option("--terminals", o.terminals, "comma-separated terminal ids");
}

void add_common(CLI::App* c, Options& o) {
    c->add_flag("--json", o.json, "machine-readable output");
}

void add_budget(CLI::App* c, Options& o) {
    c->add_option("--budget", o.budget, "node-expansion cap (default: KAPPA_BUDGET or 50000000)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized connectivity toolkit: exact kappa(S), reductions and oracles"};
    app.require_subcommand(1);
    Options o;
    std::function<int(const Options&)> action;
    auto bind = [&](CLI::App* c, int (*f)(const Options&)) { c->callback([&action, f] { action = f; }); };

    auto* kappa = app.add_subcommand("kappa", "maximum number of internally disjoint trees connecting S");
    add_graph(kappa, o);
    add_budget(kappa, o);
    add_common(kappa, o);
    kappa->add_option("--out", o.out, "write the certificate JSON here");
    kappa->add_option("--dot", o.dot, "write a DOT rendering here");
    bind(kappa, cmd_kappa);

    auto* kk = app.add_subcommand("kappa-k", "minimum of kappa(S) over all k-subsets");
    add_graph(kk, o, false);
    kk->add_option("--k", o.k, "subset size");
    add_budget(kk, o);
    add_common(kk, o);
    bind(kk, cmd_kappa_k);

    auto* decide = app.add_subcommand("decide", "decide kappa(S) >= k");
    add_graph(decide, o);
    decide->add_option("--k", o.k, "threshold");
    add_budget(decide, o);
    add_common(decide, o);
    decide->add_option("--out", o.out, "write the certificate JSON here");
    decide->add_option("--dot", o.dot, "write a DOT rendering here");
    bind(decide, cmd_decide);

    auto* verify = app.add_subcommand("verify", "check a tree certificate");
    add_graph(verify, o);
    verify->add_option("--in,--cert", o.in, "certificate JSON");
    add_common(verify, o);
    bind(verify, cmd_verify);

    auto* classify = app.add_subcommand("classify", "reduced topologies of minimal Steiner trees");
    add_graph(classify, o);
    classify->add_option("--in,--cert", o.in, "classify the trees of this certificate instead");
    add_common(classify, o);
    bind(classify, cmd_classify);

    auto* reduce = app.add_subcommand("reduce", "build a kappa instance from a source problem");
    reduce->require_subcommand(1);
    auto* r3dm = reduce->add_subcommand("3dm", "3-dimensional matching (JSON input)");
    auto* r3sat = reduce->add_subcommand("3sat", "CNF formula (DIMACS input)");
    for (auto* c : {r3dm, r3sat}) {
        c->add_option("--in", o.in, "input file");
        c->add_option("--out", o.out, "write the reduced instance JSON here");
        c->add_option("--dot", o.dot, "write a DOT rendering here");
        add_common(c, o);
    }
    bind(r3dm, cmd_reduce_3dm);
    bind(r3sat, cmd_reduce_3sat);

    auto* lift = app.add_subcommand("lift", "grow S to k1 terminals, preserving kappa(S) >= k");
    add_graph(lift, o);
    lift->add_option("--k1", o.k1, "target terminal count");
    lift->add_option("--k,--k2", o.k, "threshold");
    lift->add_option("--out", o.out, "write the instance JSON here");
    lift->add_option("--dot", o.dot, "write a DOT rendering here");
    add_common(lift, o);
    bind(lift, cmd_lift);

    auto* pad = app.add_subcommand("pad", "add k-2 stars so kappa(S) >= k iff kappa(S) >= 2 before");
    add_graph(pad, o);
    pad->add_option("--k", o.k, "target tree count (k >= 3)");
    pad->add_option("--out", o.out, "write the instance JSON here");
    pad->add_option("--dot", o.dot, "write a DOT rendering here");
    add_common(pad, o);
    bind(pad, cmd_pad);

    auto* oracle = app.add_subcommand("oracle", "brute-force source-problem solvers");
    oracle->require_subcommand(1);
    auto* o3dm = oracle->add_subcommand("3dm", "perfect matching by exhaustive search");
    auto* osat = oracle->add_subcommand("sat", "satisfiability by exhaustive search");
    for (auto* c : {o3dm, osat}) {
        c->add_option("--in", o.in, "input file");
        add_common(c, o);
    }
    bind(o3dm, cmd_oracle_3dm);
    bind(osat, cmd_oracle_sat);

    auto* rt = app.add_subcommand("roundtrip", "seeded source instances through reduction and solver");
    rt->require_subcommand(1);
    auto* rt3dm = rt->add_subcommand("3dm", "random 3-DM instances");
    rt3dm->add_option("--n", o.n, "ground-set size");
    rt3dm->add_option("--m", o.m, "triple count");
    auto* rt3sat = rt->add_subcommand("3sat", "random CNF formulas");
    rt3sat->add_option("--vars", o.vars, "variable count");
    rt3sat->add_option("--clauses", o.clauses, "clause count");
    for (auto* c : {rt3dm, rt3sat}) {
        c->add_option("--count", o.count, "number of instances");
        c->add_option("--seed", o.seed, "generator seed");
        add_budget(c, o);
        add_common(c, o);
    }
    bind(rt3dm, cmd_roundtrip_3dm);
    bind(rt3sat, cmd_roundtrip_3sat);

    auto* gen = app.add_subcommand("gen", "seeded random instances");
    gen->require_subcommand(1);
    auto* ggraph = gen->add_subcommand("graph", "connected G(order, prob) graph JSON");
    ggraph->add_option("--order", o.order, "vertex count");
    ggraph->add_option("--prob", o.prob, "edge probability");
    auto* g3dm = gen->add_subcommand("3dm", "3-DM instance JSON");
    g3dm->add_option("--n", o.n, "ground-set size");
    g3dm->add_option("--m", o.m, "triple count");
    auto* gcnf = gen->add_subcommand("cnf", "DIMACS CNF");
    gcnf->add_option("--vars", o.vars, "variable count");
    gcnf->add_option("--clauses", o.clauses, "clause count");
    for (auto* c : {ggraph, g3dm, gcnf}) {
        c->add_option("--seed", o.seed, "generator seed");
        c->add_option("--out", o.out, "output file (default stdout)");
    }
    bind(ggraph, cmd_gen_graph);
    bind(g3dm, cmd_gen_3dm);
    bind(gcnf, cmd_gen_cnf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        return action(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
