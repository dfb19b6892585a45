#include <doctest.h>

#include <random>
#include <sstream>

#include "matchfree/io.hpp"

using namespace matchfree;

TEST_CASE("edge list round trip") {
    Graph g = make_cycle(5);
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    CHECK(parse_edge_list(in) == g);

    std::istringstream commented("# a graph\n3\n0 1\n\n1 2\n");
    CHECK(parse_edge_list(commented) == make_path(3));

    std::istringstream bad("");
    CHECK_THROWS_AS(parse_edge_list(bad), std::invalid_argument);
}

TEST_CASE("graph6 known strings") {
    CHECK(to_graph6(make_complete(2)) == "A_");
    CHECK(to_graph6(make_complete(4)) == "C~");
    CHECK(parse_graph6("A_") == make_complete(2));
    CHECK(parse_graph6("C~") == make_complete(4));
    CHECK(parse_graph6(">>graph6<<C~") == make_complete(4));
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("C"), std::invalid_argument);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(606);
    for (int rep = 0; rep < 100; ++rep) {
        int n = 1 + static_cast<int>(rng() % 12);
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) edges.push_back({i, j});
        Graph g(n, edges);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("family specs") {
    auto cycles = parse_family_spec("cycle:5");
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0].first == "cycle:5");
    CHECK(cycles[0].second == make_cycle(5));

    CHECK(parse_family_spec("kbip:3,3")[0].second == make_complete_bipartite(3, 3));
    CHECK(parse_family_spec("tree:0-1,1-2,1-3")[0].second == Graph(4, {{0, 1}, {1, 2}, {1, 3}}));
    CHECK(parse_family_spec("all_connected:3").size() == 4);

    CHECK_THROWS_AS(parse_family_spec("cycle"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("blob:4"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("tree:0-1,2-3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("tree:0-1,1-2,0-2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec("all_connected:7"), std::invalid_argument);
}

TEST_CASE("complex JSON round trip") {
    SimplicialComplex c = SimplicialComplex::from_facets(
        4, {VertexSet::of({0, 1}), VertexSet::of({1, 2, 3})});
    std::string js = complex_to_json(c);
    CHECK(js == R"({"facets":[[0,1],[1,2,3]],"n":4})");
    CHECK(complex_from_json(js) == c);

    CHECK(complex_to_json(SimplicialComplex::void_complex(2)) == R"({"facets":[],"n":2})");
    CHECK(complex_to_json(SimplicialComplex::empty_complex(2)) == R"({"facets":[[]],"n":2})");
}

TEST_CASE("ideal JSON") {
    MonomialIdeal ideal(3, {VertexSet::of({0, 1}), VertexSet::of({1, 2})});
    CHECK(ideal_to_json(ideal) == R"({"generators":[[0,1],[1,2]],"variables":3})");
}
