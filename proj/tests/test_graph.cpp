#include <doctest.h>

#include "gencon/graph.hpp"
#include "gencon/graph_io.hpp"
#include "gencon/random.hpp"

using namespace gencon;

TEST_CASE("parse_graph: path, K4, and rejected inputs") {
    Graph p3 = parse_graph(R"({"order":3,"edges":[[0,1],[1,2]]})");
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(2, 1));
    CHECK_FALSE(p3.has_edge(0, 2));

    Graph k4 = parse_graph(R"({"order":4,"edges":[[0,1],[1,2],[2,3],[3,0],[0,2],[1,3]]})");
    CHECK(k4.edge_count() == 6);
    CHECK(k4 == complete_graph(4));

    CHECK_THROWS_WITH_AS(parse_graph(R"({"order":2,"edges":[[0,0]]})"), doctest::Contains("self-loop"), Error);
    CHECK_THROWS_WITH_AS(parse_graph(R"({"order":3,"edges":[[0,1],[1,0]]})"), doctest::Contains("duplicate"), Error);
    CHECK_THROWS_WITH_AS(parse_graph(R"({"order":3,"edges":[[0,1],[1,5]]})"), doctest::Contains("edge 1"), Error);
    CHECK_THROWS_WITH_AS(parse_graph(R"({"order":3,"edges":[[0,1],)"), doctest::Contains("byte"), Error);
    CHECK_THROWS_AS(parse_graph(R"({"edges":[]})"), Error);
    CHECK_THROWS_AS(parse_graph(R"({"order":2,"labels":["a","a"],"edges":[]})"), Error);
}

TEST_CASE("edges are canonical and sorted") {
    Graph g(4, {{3, 1}, {2, 0}, {1, 0}});
    REQUIRE(g.edges().size() == 3);
    CHECK(g.edges()[0] == Edge(0, 1));
    CHECK(g.edges()[1] == Edge(0, 2));
    CHECK(g.edges()[2] == Edge(1, 3));
    CHECK(g.edges()[2].u == 1);
    CHECK(serialize_graph(g) == R"({"order":4,"edges":[[0,1],[0,2],[1,3]]})");
}

TEST_CASE("serialize/parse round-trip on random graphs") {
    Rng rng(42);
    for (int i = 0; i < 50; ++i) {
        Graph g = random_graph(rng.between(1, 12), 0.3, rng, false);
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
    Graph labelled = path_graph(3).with_labels({"a", "b", "c\"q"});
    CHECK(parse_graph(serialize_graph(labelled)) == labelled);
}

TEST_CASE("components") {
    auto p3 = components(path_graph(3));
    REQUIRE(p3.size() == 1);
    CHECK(p3[0] == std::vector<VertexId>{0, 1, 2});

    auto empty = components(Graph(3, {}));
    CHECK(empty.size() == 3);

    auto two = components(Graph(4, {{0, 2}, {1, 3}}));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == std::vector<VertexId>{0, 2});
    CHECK(two[1] == std::vector<VertexId>{1, 3});
}

TEST_CASE("components form a partition") {
    Rng rng(7);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(rng.between(1, 15), 0.15, rng, false);
        std::vector<int> hits(g.order(), 0);
        for (const auto& c : components(g)) {
            CHECK(std::is_sorted(c.begin(), c.end()));
            for (VertexId v : c) ++hits[v];
        }
        for (int h : hits) CHECK(h == 1);
    }
}

TEST_CASE("export_dot") {
    Graph p3 = path_graph(3);
    std::string dot = export_dot(p3, TerminalSet(p3, {0, 2}));
    CHECK(dot ==
          "graph G {\n  0 [shape=doublecircle];\n  1;\n  2 [shape=doublecircle];\n  0 -- 1;\n  1 -- 2;\n}\n");

    CHECK(export_dot(Graph(1, {})) == "graph G {\n  0;\n}\n");

    std::string k4 = export_dot(complete_graph(4));
    CHECK(k4.find("0 -- 1;\n  0 -- 2;\n  0 -- 3;\n  1 -- 2;\n  1 -- 3;\n  2 -- 3;\n") != std::string::npos);
    CHECK(export_dot(complete_graph(4)) == k4);

    Graph big = Graph(2, {{0, 1}});
    TerminalSet s(Graph(5, {}), {0, 4});
    CHECK_THROWS_AS(export_dot(big, s), Error);
}

TEST_CASE("terminal sets") {
    Graph g = path_graph(4);
    TerminalSet s(g, {3, 0});
    CHECK(s.members() == std::vector<VertexId>{0, 3});
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(1));
    CHECK_THROWS_AS(TerminalSet(g, {1}), Error);
    CHECK_THROWS_AS(TerminalSet(g, {1, 1}), Error);
    CHECK_THROWS_AS(TerminalSet(g, {1, 4}), Error);
    CHECK(parse_terminal_list(g, "2, 0,3").members() == std::vector<VertexId>{0, 2, 3});
    CHECK_THROWS_AS(parse_terminal_list(g, "0,x"), Error);
    CHECK_THROWS_AS(parse_terminal_list(g, "0,,1"), Error);
}

TEST_CASE("relabeling keeps the edge multiset") {
    Graph g = petersen_graph();
    std::vector<VertexId> perm{9, 8, 7, 6, 5, 4, 3, 2, 1, 0};
    Graph h = g.relabeled(perm);
    CHECK(h.edge_count() == g.edge_count());
    for (const Edge& e : g.edges()) CHECK(h.has_edge(perm[e.u], perm[e.v]));
}
