#include <doctest.h>

#include <set>
#include <stdexcept>

#include "rainbowdom/errors.hpp"
#include "rainbowdom/graph.hpp"
#include "oracles.hpp"

using namespace rainbowdom;

TEST_CASE("petersen p(4,1) is the cube") {
    const Graph g = build_generalized_petersen({4, 1});
    CHECK(g.n_vertices() == 8);
    CHECK(g.edge_count() == 12);
    CHECK(is_cubic(g));
    CHECK(oracles::bfs_girth(g) == 4);
    CHECK(oracles::two_colorable(g));
    CHECK(g.label(0) == std::optional<std::string>("u0"));
    CHECK(g.label(7) == std::optional<std::string>("v3"));
}

TEST_CASE("petersen p(5,2) is the petersen graph") {
    const Graph g = build_generalized_petersen({5, 2});
    CHECK(g.n_vertices() == 10);
    CHECK(g.edge_count() == 15);
    CHECK(is_cubic(g));
    CHECK(oracles::bfs_girth(g) == 5);
    CHECK_FALSE(oracles::two_colorable(g));
    CHECK_FALSE(bipartition(g).has_value());
}

TEST_CASE("petersen p(6,1) is cubic and bipartite") {
    const Graph g = build_generalized_petersen({6, 1});
    CHECK(is_cubic(g));
    CHECK(oracles::two_colorable(g));
    const auto parts = bipartition(g);
    REQUIRE(parts.has_value());
    CHECK(parts->first.size() == 6);
    CHECK(parts->second.size() == 6);
    CHECK(parts->first.front() == 0); // lowest id of the component in part 0
}

TEST_CASE("petersen parameter domain") {
    CHECK_THROWS_AS(PetersenParams(6, 3), std::invalid_argument);
    CHECK_THROWS_AS(PetersenParams(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(PetersenParams(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(PetersenParams(5, 5), std::invalid_argument);
}

TEST_CASE("p(n,k) equals p(n,n-k)") {
    CHECK(PetersenParams(6, 5) == PetersenParams(6, 1));
    CHECK(build_generalized_petersen({7, 5}) == build_generalized_petersen({7, 2}));
}

TEST_CASE("petersen family invariants across a sweep") {
    for (int n = 3; n <= 30; ++n) {
        for (int k = 1; 2 * k < n; ++k) {
            const Graph g = build_generalized_petersen({n, k});
            CAPTURE(n);
            CAPTURE(k);
            CHECK(g.n_vertices() == 2 * n);
            CHECK(g.edge_count() == 3 * n);
            CHECK(is_cubic(g));
            const bool expect_bipartite = n % 2 == 0 && k % 2 == 1;
            CHECK(bipartition(g).has_value() == expect_bipartite);
            CHECK(bipartition(g).has_value() == oracles::two_colorable(g));
        }
    }
}

TEST_CASE("subdivided k4 shape") {
    const Graph g = build_subdivided_k4();
    CHECK(g.n_vertices() == 10);
    CHECK(g.edge_count() == 12);
    for (int v = 0; v < 4; ++v) CHECK(g.degree(v) == 3);
    for (int v = 4; v < 10; ++v) CHECK(g.degree(v) == 2);
    CHECK_FALSE(is_cubic(g));
    const auto parts = bipartition(g);
    REQUIRE(parts.has_value());
    // Branch vertices on one side, subdivision vertices on the other.
    CHECK(parts->first == std::vector<int>{0, 1, 2, 3});
    // Every subdivision vertex joins one distinct pair of branch vertices.
    std::set<std::pair<int, int>> pairs;
    for (int s = 4; s < 10; ++s) {
        const auto& nbrs = g.neighbors(s);
        REQUIRE(nbrs.size() == 2);
        pairs.insert({nbrs[0], nbrs[1]});
    }
    CHECK(pairs.size() == 6);
}

TEST_CASE("example graph is cubic bipartite on 36 vertices") {
    const Graph g = build_example_graph();
    CHECK(g.n_vertices() == 36);
    CHECK(g.edge_count() == 54);
    CHECK(is_cubic(g));
    CHECK(oracles::two_colorable(g));
    // Each hub has exactly one neighbor in each copy.
    for (int hub = 30; hub < 36; ++hub) {
        std::set<int> copies;
        for (int w : g.neighbors(hub)) copies.insert(w / 10);
        CHECK(copies == std::set<int>{0, 1, 2});
    }
}

TEST_CASE("graph json round trip") {
    const Graph g = build_generalized_petersen({4, 1});
    const Graph parsed = parse_graph(serialize_graph(g));
    CHECK(parsed == g);
    CHECK(serialize_graph(parsed) == serialize_graph(g));
}

TEST_CASE("graph parse rejects malformed input") {
    CHECK_THROWS_AS(parse_graph("not json"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"edges": []})"), ParseError);
    // Non-increasing endpoints (an edge listed from the wrong side).
    CHECK_THROWS_AS(parse_graph(R"({"n_vertices": 3, "edges": [[1,0]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"n_vertices": 3, "edges": [[0,0]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"n_vertices": 3, "edges": [[0,5]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"n_vertices": 3, "edges": [[0,1],[0,1]]})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"n_vertices": 3, "edges": [[0,1]], "labels": {"9": "x"}})"), ParseError);
}

TEST_CASE("dot export lists every edge") {
    const Graph g = build_generalized_petersen({4, 1});
    const std::string dot = export_dot(g);
    size_t count = 0, pos = 0;
    while ((pos = dot.find("--", pos)) != std::string::npos) {
        ++count;
        pos += 2;
    }
    CHECK(count == 12);
    CHECK(dot.find("label=\"u0\"") != std::string::npos);
}

TEST_CASE("single vertex bipartition") {
    const Graph g(1);
    const auto parts = bipartition(g);
    REQUIRE(parts.has_value());
    CHECK(parts->first == std::vector<int>{0});
    CHECK(parts->second.empty());
}

TEST_CASE("graph construction guards") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 3), std::invalid_argument);
}
