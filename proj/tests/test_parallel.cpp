#include <doctest.h>

#include "gencon/harness.hpp"
#include "gencon/oracle.hpp"
#include "gencon/random.hpp"
#include "gencon/solver.hpp"

using namespace gencon;

TEST_CASE("kappa_k parallel sweep equals serial") {
    Rng rng(12);
    for (int i = 0; i < 25; ++i) {
        Graph g = random_graph(rng.between(4, 8), 0.5, rng);
        int k = rng.between(2, std::min(4, g.order()));
        auto par = kappa_k_graph(g, k);
        auto ser = kappa_k_graph_serial(g, k);
        CHECK(par.value == ser.value);
        CHECK(par.subset == ser.subset);
        CHECK(par.exact == ser.exact);
        CHECK(par.expansions == ser.expansions);
    }
    Graph pet = petersen_graph();
    auto tight = kappa_k_graph(pet, 3, Budget{2});
    auto tight_ser = kappa_k_graph_serial(pet, 3, Budget{2});
    CHECK(tight.value == tight_ser.value);
    CHECK(tight.subset == tight_ser.subset);
    CHECK(tight.exact == tight_ser.exact);
}

TEST_CASE("kappa_k matches the oracle minimum") {
    Rng rng(21);
    for (int i = 0; i < 15; ++i) {
        Graph g = random_graph(rng.between(3, 6), 0.6, rng);
        int k = rng.between(2, g.order());
        int best = 1 << 20;
        for (std::uint64_t idx = 0; idx < subset_count(g.order(), k); ++idx)
            best = std::min(best, brute_force_kappa(g, TerminalSet(g, unrank_subset(g.order(), k, idx))));
        CHECK(kappa_k_graph(g, k).value == best);
    }
}

TEST_CASE("roundtrip parallel equals serial") {
    Rng rng(9);
    std::vector<CnfFormula> fs;
    for (int i = 0; i < 20; ++i) fs.push_back(random_cnf(rng.between(2, 4), rng.between(1, 6), rng));
    auto a = roundtrip_3sat(fs, Budget{});
    auto b = roundtrip_3sat_serial(fs, Budget{});
    CHECK(a.yes == b.yes);
    CHECK(a.no == b.no);
    CHECK(a.unknown == b.unknown);
    REQUIRE(a.outcomes.size() == b.outcomes.size());
    for (std::size_t i = 0; i < a.outcomes.size(); ++i) CHECK(a.outcomes[i].decision == b.outcomes[i].decision);
}
