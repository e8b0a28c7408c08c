// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "gencon/harness.hpp"
#include "gencon/menger.hpp"
#include "gencon/oracle.hpp"
#include "gencon/random.hpp"
#include "gencon/reductions.hpp"
#include "gencon/solver.hpp"
#include "gencon/steiner.hpp"

using namespace gencon;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failures = 0;

void run(int id, const char* name, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s criterion %d (%s): %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::vector<TerminalSet> subsets_of_sizes(const Graph& g, int lo, int hi) {
    std::vector<TerminalSet> out;
    for (int k = lo; k <= std::min(hi, g.order()); ++k)
        for (std::uint64_t i = 0; i < subset_count(g.order(), k); ++i)
            out.emplace_back(g, unrank_subset(g.order(), k, i));
    return out;
}

// Every labelled connected graph on `order` vertices.
std::vector<Graph> all_connected_graphs(int order) {
    std::vector<Edge> slots;
    for (int a = 0; a < order; ++a)
        for (int b = a + 1; b < order; ++b) slots.emplace_back(a, b);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        std::vector<Edge> e;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) e.push_back(slots[i]);
        Graph g(order, std::move(e));
        if (components(g).size() == 1) out.push_back(std::move(g));
    }
    return out;
}

// Half of the sampled n = 3 instances carry a planted perfect matching so
// both directions of the equivalence get exercised.
ThreeDMInstance sample_3dm(int n, int m, bool plant, Rng& rng) {
    if (!plant) return random_3dm(n, m, rng);
    std::vector<int> pv(n), pw(n);
    std::iota(pv.begin(), pv.end(), 0);
    std::iota(pw.begin(), pw.end(), 0);
    for (int k = n - 1; k > 0; --k) {
        std::swap(pv[k], pv[rng.below(k + 1)]);
        std::swap(pw[k], pw[rng.below(k + 1)]);
    }
    ThreeDMInstance inst{n, {}};
    for (int i = 0; i < n; ++i) inst.triples.push_back({i, pv[i], pw[i]});
    ThreeDMInstance extra = random_3dm(n, m, rng);
    for (const auto& t : extra.triples) {
        if (inst.m() == m) break;
        if (std::find(inst.triples.begin(), inst.triples.end(), t) == inst.triples.end()) inst.triples.push_back(t);
    }
    for (int k = inst.m() - 1; k > 0; --k) std::swap(inst.triples[k], inst.triples[rng.below(k + 1)]);
    return inst;
}

std::vector<ThreeDMInstance> threedm_batch() {
    std::vector<ThreeDMInstance> batch;
    for (int n = 1; n <= 2; ++n) {
        std::vector<std::array<int, 3>> all;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) all.push_back({a, b, c});
        const int space = static_cast<int>(all.size());
        for (int m = std::max(2, n); m <= std::min(5, space); ++m)
            for (std::uint64_t i = 0; i < subset_count(space, m); ++i) {
                ThreeDMInstance inst{n, {}};
                for (VertexId idx : unrank_subset(space, m, i)) inst.triples.push_back(all[idx]);
                batch.push_back(std::move(inst));
            }
    }
    Rng rng(3001);
    for (int i = 0; i < 100; ++i) batch.push_back(sample_3dm(3, rng.between(3, 6), i % 2 == 0, rng));
    return batch;
}

std::vector<CnfFormula> cnf_batch() {
    std::vector<CnfFormula> batch{full_sign_pattern_formula()};
    Rng rng(5001);
    while (batch.size() < 200) batch.push_back(random_cnf(rng.between(2, 4), rng.between(1, 6), rng));
    return batch;
}

std::string counts(const RoundtripReport& r) {
    return std::to_string(r.agree()) + "/" + std::to_string(r.total()) + " agree (" + std::to_string(r.yes) +
           " yes, " + std::to_string(r.no) + " no), " + std::to_string(r.disagree) + " disagree, " +
           std::to_string(r.unknown) + " unknown, " + std::to_string(r.errors) + " errors";
}

bool decide_yes(const Graph& g, const TerminalSet& s, int k, bool& unknown) {
    auto d = decide_kappa_at_least(g, s, k);
    if (d.decision == Decision::unknown) unknown = true;
    return d.decision == Decision::certificate;
}

}  // namespace

int main() {
    const auto dm = threedm_batch();
    const auto sat = cnf_batch();
    RoundtripReport dm_report, sat_report;

    run(1, "Whitney/Menger equivalence", [] {
        Rng rng(1001);
        int checked = 0, mismatches = 0;
        for (int i = 0; i < 200; ++i) {
            Graph g = random_graph(rng.between(2, 10), 0.2 + 0.6 * rng.unit(), rng);
            std::vector<std::pair<int, int>> pairs;
            if (i < 20) {
                for (int u = 0; u < g.order(); ++u)
                    for (int v = u + 1; v < g.order(); ++v) pairs.emplace_back(u, v);
            } else {
                int u = static_cast<int>(rng.below(g.order()));
                int v = static_cast<int>(rng.below(g.order() - 1));
                pairs.emplace_back(u, v >= u ? v + 1 : v);
            }
            for (auto [u, v] : pairs) {
                auto r = kappa_set_exact(g, TerminalSet(g, {u, v}));
                if (r.status != SolveStatus::exact || r.value != menger_pair(g, u, v)) ++mismatches;
                ++checked;
            }
        }
        return Outcome{mismatches == 0, std::to_string(checked) + " pairs, " + std::to_string(mismatches) + " mismatches"};
    });

    run(2, "oracle equivalence", [] {
        int checked = 0, mismatches = 0, inexact = 0;
        auto compare = [&](const Graph& g, const TerminalSet& s) {
            auto r = kappa_set_exact(g, s);
            if (r.status != SolveStatus::exact) ++inexact;
            if (r.value != brute_force_kappa(g, s)) ++mismatches;
            ++checked;
        };
        int graphs = 0;
        for (int order = 2; order <= 5; ++order)
            for (const Graph& g : all_connected_graphs(order)) {
                ++graphs;
                for (const TerminalSet& s : subsets_of_sizes(g, 2, 4)) compare(g, s);
            }
        Rng rng(2001);
        for (int i = 0; i < 100; ++i) {
            Graph g = random_graph(rng.between(6, 7), 0.3 + 0.5 * rng.unit(), rng);
            compare(g, random_terminals(g, rng.between(2, 4), rng));
        }
        return Outcome{mismatches == 0 && inexact == 0,
                       std::to_string(graphs) + " exhaustive graphs + 100 samples, " + std::to_string(checked) +
                           " (G,S) pairs, " + std::to_string(mismatches) + " mismatches"};
    });

    run(3, "3-DM reduction round-trip", [&] {
        dm_report = roundtrip_3dm(dm, Budget{});
        return Outcome{dm_report.disagree == 0 && dm_report.unknown == 0 && dm_report.errors == 0 &&
                           dm_report.agree() == dm_report.total(),
                       counts(dm_report)};
    });

    run(4, "3-SAT reduction round-trip", [&] {
        sat_report = roundtrip_3sat(sat, Budget{});
        bool unsat_ok = !sat_report.outcomes.empty() && !sat_report.outcomes[0].source_yes &&
                        sat_report.outcomes[0].decision == Decision::refuted;
        return Outcome{sat_report.disagree == 0 && sat_report.unknown == 0 && sat_report.errors == 0 &&
                           sat_report.agree() == sat_report.total() && unsat_ok,
                       counts(sat_report) + (unsat_ok ? ", 8-clause formula refuted" : ", 8-clause formula NOT refuted")};
    });

    run(5, "witness soundness", [&] {
        int positives = 0, bad = 0;
        for (const auto* rep : {&dm_report, &sat_report})
            for (const auto& o : rep->outcomes) {
                if (!o.source_yes) continue;
                ++positives;
                if (!o.forward_witness_ok || !o.reverse_witness_ok || o.decision != Decision::certificate) ++bad;
            }
        return Outcome{positives > 0 && bad == 0 && dm_report.total() > 0 && sat_report.total() > 0,
                       std::to_string(positives) + " positive instances, " + std::to_string(bad) + " witness failures"};
    });

    run(6, "terminal lifting", [] {
        Rng rng(6001);
        int mismatches = 0, unknown = 0, yes = 0;
        for (int i = 0; i < 100; ++i) {
            Graph g = random_graph(rng.between(4, 7), 0.4 + 0.5 * rng.unit(), rng);
            TerminalSet s = random_terminals(g, 4, rng);
            int k1 = rng.between(5, 6), k2 = rng.between(2, 3);
            bool u = false;
            bool before = decide_yes(g, s, k2, u);
            auto lifted = lift_terminals(g, s, k1, k2);
            bool after = decide_yes(lifted.graph, lifted.terminals, k2, u);
            if (u) ++unknown;
            if (before != after) ++mismatches;
            yes += before;
        }
        return Outcome{mismatches == 0 && unknown == 0, "100 pairs (" + std::to_string(yes) + " yes), " +
                                                            std::to_string(mismatches) + " mismatches, " +
                                                            std::to_string(unknown) + " unknown"};
    });

    run(7, "tree-count padding", [] {
        Rng rng(7001);
        int mismatches = 0, unknown = 0, yes = 0;
        for (int i = 0; i < 100; ++i) {
            Graph g = random_graph(rng.between(3, 7), 0.3 + 0.5 * rng.unit(), rng);
            TerminalSet s = random_terminals(g, rng.between(2, std::min(4, g.order())), rng);
            int k = rng.between(3, 4);
            bool u = false;
            bool base = decide_yes(g, s, 2, u);
            auto padded = pad_tree_count(g, s, k);
            bool after = decide_yes(padded.graph, padded.terminals, k, u);
            if (u) ++unknown;
            if (base != after) ++mismatches;
            yes += base;
        }
        return Outcome{mismatches == 0 && unknown == 0, "100 pairs (" + std::to_string(yes) + " yes), " +
                                                            std::to_string(mismatches) + " mismatches, " +
                                                            std::to_string(unknown) + " unknown"};
    });

    run(8, "K6 topology counts", [] {
        Graph k6 = complete_graph(6);
        auto three = count_topologies(k6, TerminalSet(k6, {0, 1, 2}));
        auto four = count_topologies(k6, TerminalSet(k6, {0, 1, 2, 3}));
        return Outcome{three == 2 && four == 5,
                       "|S|=3 -> " + std::to_string(three) + ", |S|=4 -> " + std::to_string(four)};
    });

    run(9, "structural invariants", [&] {
        Rng rng(9001);
        int degree = 0, monotone = 0, relabel = 0, sizes = 0, graphs = 0;
        for (int i = 0; i < 200; ++i) {
            int n = rng.between(3, 8);
            Graph g = random_graph(n, 0.3 + 0.5 * rng.unit(), rng);
            TerminalSet s = random_terminals(g, rng.between(2, std::min(5, n)), rng);
            auto base = kappa_set_exact(g, s);
            ++graphs;
            if (base.value > degree_bound(g, s)) ++degree;

            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (!g.has_edge(a, b) && kappa_set_exact(g.with_edge(a, b), s).value < base.value) ++monotone;

            std::vector<VertexId> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            for (int k = n - 1; k > 0; --k) std::swap(perm[k], perm[rng.below(k + 1)]);
            std::vector<VertexId> moved;
            for (VertexId v : s) moved.push_back(perm[v]);
            Graph h = g.relabeled(perm);
            if (kappa_set_exact(h, TerminalSet(h, moved)).value != base.value) ++relabel;
        }
        for (const auto& inst : dm)
            if (reduce_3dm(inst).graph.order() != 4 + 2 * inst.n + 2 * inst.m()) ++sizes;
        for (const auto& phi : sat)
            if (reduce_3sat(phi).graph.order() != 3 * phi.num_vars + static_cast<int>(phi.clauses.size()) + 1) ++sizes;
        int total = degree + monotone + relabel + sizes;
        return Outcome{total == 0, std::to_string(graphs) + " graphs, " + std::to_string(dm.size() + sat.size()) +
                                       " reductions; violations: degree " + std::to_string(degree) + ", monotonicity " +
                                       std::to_string(monotone) + ", relabeling " + std::to_string(relabel) +
                                       ", size " + std::to_string(sizes)};
    });

    std::printf("%s: %d of 9 criteria failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
