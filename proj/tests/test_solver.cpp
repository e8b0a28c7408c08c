#include <doctest.h>

#include <numeric>

#include "gencon/oracle.hpp"
#include "gencon/random.hpp"
#include "gencon/solver.hpp"

using namespace gencon;

namespace {

void check_certificate(const Graph& g, const TerminalSet& s, const TreeCertificate& cert) {
    auto r = verify_certificate(g, s, cert);
    CHECK(r.valid);
}

}  // namespace

TEST_CASE("kappa of small graphs") {
    Graph p3 = path_graph(3);
    TerminalSet ends(p3, {0, 2});
    auto a = kappa_set_exact(p3, ends);
    CHECK(a.value == 1);
    CHECK(a.status == SolveStatus::exact);
    CHECK(a.upper_bound == 1);
    check_certificate(p3, ends, a.certificate);

    Graph k4 = complete_graph(4);
    TerminalSet all(k4, {0, 1, 2, 3});
    CHECK(brute_force_kappa(k4, all) == 2);
    auto b = kappa_set_exact(k4, all);
    CHECK(b.value == 2);
    CHECK(b.certificate.size() == 2);
    check_certificate(k4, all, b.certificate);

    Graph c4 = cycle_graph(4);
    TerminalSet three(c4, {0, 1, 2});
    CHECK(brute_force_kappa(c4, three) == 1);
    CHECK(kappa_set_exact(c4, three).value == 1);
}

TEST_CASE("disconnected or isolated terminals give zero") {
    Graph g(5, {{0, 1}, {2, 3}});
    TerminalSet split(g, {0, 2});
    auto r = kappa_set_exact(g, split);
    CHECK(r.value == 0);
    CHECK(r.status == SolveStatus::exact);
    CHECK(r.certificate.size() == 0);
    CHECK(brute_force_kappa(g, split) == 0);
    CHECK(kappa_set_exact(g, TerminalSet(g, {0, 4})).value == 0);
    CHECK(decide_kappa_at_least(g, split, 1).decision == Decision::refuted);
}

TEST_CASE("decide") {
    Graph k4 = complete_graph(4);
    TerminalSet all(k4, {0, 1, 2, 3});
    auto yes = decide_kappa_at_least(k4, all, 2);
    CHECK(yes.decision == Decision::certificate);
    CHECK(yes.certificate.size() == 2);
    check_certificate(k4, all, yes.certificate);
    CHECK(decide_kappa_at_least(k4, all, 3).decision == Decision::refuted);

    Graph c4 = cycle_graph(4);
    TerminalSet opp(c4, {0, 2});
    auto arcs = decide_kappa_at_least(c4, opp, 2);
    CHECK(arcs.decision == Decision::certificate);
    check_certificate(c4, opp, arcs.certificate);

    auto one = decide_kappa_at_least(c4, opp, 1);
    CHECK(one.decision == Decision::certificate);
    CHECK(one.certificate.size() == 1);

    CHECK_THROWS_AS(decide_kappa_at_least(c4, opp, 0), Error);
}

TEST_CASE("budget exhaustion reports a lower bound") {
    Graph k8 = complete_graph(8);
    TerminalSet s(k8, {0, 1, 2, 3});
    auto r = kappa_set_exact(k8, s, Budget{5});
    CHECK(r.status == SolveStatus::lower_bound);
    CHECK(r.value <= r.upper_bound);
    check_certificate(k8, s, r.certificate);
    CHECK(static_cast<int>(r.certificate.size()) == r.value);

    auto d = decide_kappa_at_least(k8, s, 7, Budget{5});
    CHECK(d.decision == Decision::unknown);
}

TEST_CASE("kappa_k") {
    auto c5 = kappa_k_graph(cycle_graph(5), 2);
    CHECK(c5.value == 2);
    CHECK(c5.exact);
    CHECK(c5.subset == std::vector<VertexId>{0, 1});

    auto k4 = kappa_k_graph(complete_graph(4), 4);
    CHECK(k4.value == 2);
    CHECK(k4.subset == std::vector<VertexId>{0, 1, 2, 3});

    auto p3 = kappa_k_graph(path_graph(3), 3);
    CHECK(p3.value == 1);

    auto star = kappa_k_graph(star_graph(5), 2);
    CHECK(star.value == 1);
    CHECK(star.subset == std::vector<VertexId>{0, 1});

    CHECK_THROWS_AS(kappa_k_graph(path_graph(3), 4), Error);
    CHECK_THROWS_AS(kappa_k_graph(path_graph(3), 1), Error);
}

TEST_CASE("subset ranking") {
    CHECK(subset_count(5, 2) == 10);
    CHECK(subset_count(6, 0) == 1);
    CHECK(unrank_subset(5, 2, 0) == std::vector<VertexId>{0, 1});
    CHECK(unrank_subset(5, 2, 9) == std::vector<VertexId>{3, 4});
    CHECK(unrank_subset(5, 3, 4) == std::vector<VertexId>{0, 2, 4});
    std::vector<VertexId> prev;
    for (std::uint64_t i = 0; i < subset_count(7, 3); ++i) {
        auto cur = unrank_subset(7, 3, i);
        CHECK(prev < cur);
        prev = cur;
    }
    CHECK_THROWS_AS(subset_count(60, 30), Error);
}

TEST_CASE("solver agrees with the oracle on random graphs") {
    Rng rng(2024);
    for (int i = 0; i < 150; ++i) {
        Graph g = random_graph(rng.between(2, 8), rng.unit() * 0.7 + 0.2, rng);
        TerminalSet s = random_terminals(g, rng.between(2, std::min(5, g.order())), rng);
        auto r = kappa_set_exact(g, s);
        REQUIRE(r.status == SolveStatus::exact);
        CHECK(r.value == brute_force_kappa(g, s));
        check_certificate(g, s, r.certificate);
    }
}

TEST_CASE("invariants: degree bound, edge monotonicity, relabeling") {
    Rng rng(5);
    for (int i = 0; i < 80; ++i) {
        int n = rng.between(3, 8);
        Graph g = random_graph(n, 0.45, rng);
        TerminalSet s = random_terminals(g, rng.between(2, std::min(4, n)), rng);
        int kappa = kappa_set_exact(g, s).value;
        CHECK(kappa <= degree_bound(g, s));

        std::vector<Edge> missing;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (!g.has_edge(a, b)) missing.emplace_back(a, b);
        if (!missing.empty()) {
            Edge e = missing[rng.below(missing.size())];
            CHECK(kappa_set_exact(g.with_edge(e.u, e.v), s).value >= kappa);
        }

        std::vector<VertexId> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int k = n - 1; k > 0; --k) std::swap(perm[k], perm[rng.below(k + 1)]);
        std::vector<VertexId> moved;
        for (VertexId v : s) moved.push_back(perm[v]);
        Graph h = g.relabeled(perm);
        CHECK(kappa_set_exact(h, TerminalSet(h, moved)).value == kappa);
    }
}

TEST_CASE("repeated solves are identical") {
    Graph g = petersen_graph();
    TerminalSet s(g, {0, 3, 7});
    auto a = kappa_set_exact(g, s);
    auto b = kappa_set_exact(g, s);
    CHECK(a.value == b.value);
    CHECK(a.certificate == b.certificate);
    CHECK(a.expansions == b.expansions);
    CHECK(a.value == 3);
}
