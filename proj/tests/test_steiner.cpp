#include <doctest.h>

#include "gencon/oracle.hpp"
#include "gencon/random.hpp"
#include "gencon/steiner.hpp"

using namespace gencon;

TEST_CASE("small Steiner tree lists") {
    Graph p3 = path_graph(3);
    auto a = enumerate_steiner_trees(p3, TerminalSet(p3, {0, 2}), 100);
    REQUIRE(a.trees.size() == 1);
    CHECK(a.trees[0].edges.size() == 2);
    CHECK_FALSE(a.truncated);

    Graph k3 = complete_graph(3);
    auto b = enumerate_steiner_trees(k3, TerminalSet(k3, {0, 1}), 100);
    REQUIRE(b.trees.size() == 2);
    CHECK(b.trees[0] == Tree::from_edges({{0, 1}}));
    CHECK(b.trees[1] == Tree::from_edges({{0, 2}, {1, 2}}));

    Graph c4 = cycle_graph(4);
    auto c = enumerate_steiner_trees(c4, TerminalSet(c4, {0, 2}), 100);
    REQUIRE(c.trees.size() == 2);
    CHECK(c.trees[0] == Tree::from_edges({{0, 1}, {1, 2}}));
    CHECK(c.trees[1] == Tree::from_edges({{0, 3}, {2, 3}}));
}

TEST_CASE("limit truncates") {
    Graph k5 = complete_graph(5);
    auto r = enumerate_steiner_trees(k5, TerminalSet(k5, {0, 1, 2}), 3);
    CHECK(r.trees.size() == 3);
    CHECK(r.truncated);
}

TEST_CASE("enumeration matches the oracle") {
    Rng rng(11);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(rng.between(3, 7), 0.5, rng);
        TerminalSet s = random_terminals(g, rng.between(2, std::min(4, g.order())), rng);
        auto mine = enumerate_steiner_trees(g, s, 1'000'000);
        CHECK(mine.trees == oracle_steiner_trees_serial(g, s));
    }
}

TEST_CASE("topology codes") {
    Graph p4 = path_graph(4);
    TerminalSet all(p4, {0, 1, 2, 3});
    Tree path = Tree::from_edges(p4.edges());
    CHECK(classify_topology(path, all).code == "T(T(T(T)))");

    Graph k13 = star_graph(3);
    TerminalSet leaves3(k13, {1, 2, 3});
    CHECK(classify_topology(Tree::from_edges(k13.edges()), leaves3).code == "N(TTT)");

    Graph k14 = star_graph(4);
    TerminalSet leaves4(k14, {1, 2, 3, 4});
    CHECK(classify_topology(Tree::from_edges(k14.edges()), leaves4).code == "N(TTTT)");

    // a long path between two terminals collapses to one edge
    TerminalSet ends(p4, {0, 3});
    CHECK(classify_topology(path, ends).code == "T(T)");
    CHECK(count_topologies(p4, ends) == 1);

    // subdividing star edges does not change the class
    Graph sub(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    TerminalSet tips(sub, {2, 4, 6});
    CHECK(classify_topology(Tree::from_edges(sub.edges()), tips).code == "N(TTT)");

    // the code does not depend on which terminal is which
    TerminalSet mid(p4, {0, 1, 3});
    std::vector<VertexId> rev{3, 2, 1, 0};
    Graph p4r = p4.relabeled(rev);
    TerminalSet midr(p4r, {3, 2, 0});
    CHECK(classify_topology(path, mid) == classify_topology(Tree::from_edges(p4r.edges()), midr));

    CHECK_THROWS_AS(classify_topology(path, TerminalSet(p4, {0, 1})), Error);
}

TEST_CASE("K6 has two types for three terminals and five for four") {
    Graph k6 = complete_graph(6);
    CHECK(count_topologies(k6, TerminalSet(k6, {0, 1, 2})) == 2);
    CHECK(count_topologies(k6, TerminalSet(k6, {0, 1, 2, 3})) == 5);
    auto hist = topology_histogram(k6, TerminalSet(k6, {0, 1, 2}));
    CHECK(hist.count("N(TTT)") == 1);
    CHECK(hist.count("T(T(T))") == 1);
}
