#include <doctest.h>

#include <algorithm>
#include <queue>
#include <random>

#include "matchfree/graph.hpp"
#include "matchfree/oracles.hpp"
#include "corpus.hpp"

using namespace matchfree;

namespace {

// Oracle: shortest cycle by BFS from every vertex (independent of the
// library's implementation detail of excluding parent edges).
ExtendedInt girth_bfs_oracle(const Graph& g) {
    int best = -1;
    for (int root : elements(g.verts())) {
        std::vector<int> dist(static_cast<size_t>(g.n()), -1), parent(static_cast<size_t>(g.n()), -1);
        std::queue<int> q;
        dist[static_cast<size_t>(root)] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : elements(g.adj(u) & g.verts())) {
                if (dist[static_cast<size_t>(w)] == -1) {
                    dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
                    parent[static_cast<size_t>(w)] = u;
                    q.push(w);
                } else if (w != parent[static_cast<size_t>(u)]) {
                    int len = dist[static_cast<size_t>(u)] + dist[static_cast<size_t>(w)] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    return best == -1 ? ExtendedInt::infinity() : ExtendedInt(best);
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.push_back({i, j});
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("whisker construction") {
    WhiskerGraph w3 = whisker(make_cycle(3));
    CHECK(w3.graph().n() == 6);
    CHECK(w3.graph().edges().size() == 6);
    for (int i = 0; i < 3; ++i) {
        CHECK(w3.graph().degree(w3.whisker_of(i)) == 1);
        CHECK(w3.graph().has_edge(i, w3.whisker_of(i)));
    }

    // single edge -> path y1-x1-x2-y2
    WhiskerGraph wk2 = whisker(make_complete(2));
    CHECK(wk2.graph().n() == 4);
    CHECK(wk2.graph().edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}});

    // single vertex -> K_2
    WhiskerGraph w1 = whisker(make_complete(1));
    CHECK(w1.graph().edges() == std::vector<Edge>{{0, 1}});
}

TEST_CASE("girth and odd girth") {
    CHECK(girth(make_cycle(6)) == ExtendedInt(6));
    CHECK(girth(make_path(5)).is_infinite());
    CHECK(girth(make_star(7)).is_infinite());
    CHECK(girth(make_complete(4)) == ExtendedInt(3));

    CHECK(odd_girth(make_cycle(5)) == ExtendedInt(5));
    CHECK(odd_girth(make_cycle(6)).is_infinite());
    Graph triangle_pendant(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    CHECK(odd_girth(triangle_pendant) == ExtendedInt(3));

    GraphStats st = graph_stats(make_cycle(5));
    CHECK(st.girth == ExtendedInt(5));
    CHECK(st.odd_girth == ExtendedInt(5));
    CHECK(st.matching_number == 2);
}

TEST_CASE("girth agrees with BFS and cycle-enumeration oracles") {
    std::mt19937 rng(20240811);
    for (int rep = 0; rep < 200; ++rep) {
        int n = 2 + static_cast<int>(rng() % 6);  // up to 7
        Graph g = random_graph(rng, n, 0.4);
        CAPTURE(g.edges());
        CHECK(girth(g) == girth_bfs_oracle(g));
        CHECK(girth(g) == oracle::girth_by_cycle_enumeration(g, false));
        CHECK(odd_girth(g) == oracle::girth_by_cycle_enumeration(g, true));
    }
}

TEST_CASE("matching enumeration") {
    Graph p4 = make_path(4);
    auto two = enumerate_matchings(p4, 2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].edges() == std::vector<Edge>{{0, 1}, {2, 3}});

    auto zero = enumerate_matchings(p4, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].edges().empty());

    WhiskerGraph w3 = whisker(make_cycle(3));
    auto three = enumerate_matchings(w3.graph(), 3);
    CHECK(!three.empty());
    Matching whiskers({{0, 3}, {1, 4}, {2, 5}});
    CHECK(std::find(three.begin(), three.end(), whiskers) != three.end());

    // deterministic lexicographic order
    auto one = enumerate_matchings(p4, 1);
    REQUIRE(one.size() == 3);
    CHECK(one[0].edges() == std::vector<Edge>{{0, 1}});
    CHECK(one[2].edges() == std::vector<Edge>{{2, 3}});
}

TEST_CASE("matching enumeration agrees with the subset-filter oracle") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 60; ++rep) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 5), 0.5);
        if (g.edges().size() > 14) continue;
        for (int k = 0; k <= 3; ++k) {
            auto fast = enumerate_matchings(g, k);
            auto slow = oracle::matchings_by_subset_filter(g, k);
            REQUIRE(fast.size() == slow.size());
            for (size_t i = 0; i < fast.size(); ++i) {
                std::vector<Edge> sorted = slow[i];
                std::sort(sorted.begin(), sorted.end());
                CHECK(fast[i].edges() == sorted);
            }
        }
    }
}

TEST_CASE("matching number") {
    CHECK(matching_number(whisker(make_cycle(3)).graph()) == 3);
    CHECK(matching_number(make_complete(2)) == 1);
    CHECK(matching_number(make_path(4)) == 2);
    CHECK(matching_number(Graph(3, {})) == 0);
}

TEST_CASE("whisker edges are a perfect matching: nu(W(H)) = n") {
    for (const Graph& h : test::connected_graphs_up_to(5))
        CHECK(matching_number(whisker(h).graph()) == h.num_verts());
    // spot checks at n = 6, 7
    CHECK(matching_number(whisker(make_cycle(6)).graph()) == 6);
    CHECK(matching_number(whisker(make_cycle(7)).graph()) == 7);
    CHECK(matching_number(whisker(make_complete(7)).graph()) == 7);
}

TEST_CASE("matching number table matches the recursive computation") {
    std::mt19937 rng(99);
    for (int rep = 0; rep < 30; ++rep) {
        Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7), 0.45);
        auto table = matching_number_table(g);
        for (int trial = 0; trial < 20; ++trial) {
            std::uint64_t mask = rng() & VertexSet::range(g.n()).bits;
            CHECK(table[mask] == matching_number(g.restrict_to(VertexSet{mask})));
        }
    }
}

TEST_CASE("induced subgraph") {
    Graph c5 = make_cycle(5);
    auto [p3, map] = induced_subgraph(c5, VertexSet::of({0, 1, 2}));
    CHECK(p3.n() == 3);
    CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
    CHECK(map == std::vector<int>{0, 1, 2});

    auto [full, fmap] = induced_subgraph(c5, c5.verts());
    CHECK(full == c5);

    auto [empty, emap] = induced_subgraph(c5, VertexSet{});
    CHECK(empty.n() == 0);
    CHECK(emap.empty());

    CHECK_THROWS_AS(induced_subgraph(c5, VertexSet::of({9})), std::out_of_range);
}

TEST_CASE("families") {
    CHECK(make_cycle(5).edges().size() == 5);
    CHECK(make_complete_bipartite(3, 3).edges().size() == 9);
    CHECK(make_star(5).edges().size() == 4);
    CHECK_THROWS(make_cycle(2));

    auto conn3 = all_connected_graphs(3);
    CHECK(conn3.size() == 4);
    // isomorphism-filter oracle: exactly two classes, P_3 and K_3
    std::vector<Graph> classes;
    for (const Graph& g : conn3) {
        bool seen = false;
        for (const Graph& c : classes)
            if (test::isomorphic(g, c)) seen = true;
        if (!seen) classes.push_back(g);
    }
    CHECK(classes.size() == 2);

    CHECK(all_connected_graphs(4).size() == 38);
    CHECK_THROWS_AS(all_connected_graphs(7), std::out_of_range);
    int count7 = 0;
    // n=7 streams; just probe that the callback form starts producing
    CHECK_THROWS(for_each_connected_graph(8, [](const Graph&) {}));
    for_each_connected_graph(5, [&](const Graph&) { ++count7; });
    CHECK(count7 == 728);
}

TEST_CASE("deleting a whisker pair gives the whiskering of the smaller base") {
    for (const Graph& h : test::connected_graphs(4)) {
        WhiskerGraph w = whisker(h);
        for (int i : elements(h.verts())) {
            WhiskerGraph removed = w.remove_pair(i);
            auto [hsmall, map] = induced_subgraph(h, h.verts() - VertexSet::single(i));
            WhiskerGraph direct = whisker(hsmall);
            // relabel: old base j -> rank, old whisker n+j -> (n-1)+rank
            std::vector<int> rank(static_cast<size_t>(h.n()), -1);
            for (size_t r = 0; r < map.size(); ++r) rank[static_cast<size_t>(map[r])] = static_cast<int>(r);
            std::vector<Edge> relabeled;
            for (auto [u, v] : removed.graph().edges()) {
                auto newv = [&](int x) {
                    return x < h.n() ? rank[static_cast<size_t>(x)]
                                     : hsmall.n() + rank[static_cast<size_t>(x - h.n())];
                };
                relabeled.push_back(make_edge(newv(u), newv(v)));
            }
            std::sort(relabeled.begin(), relabeled.end());
            CHECK(relabeled == direct.graph().edges());
        }
    }
}

TEST_CASE("graph invariants and guards") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::out_of_range);
    CHECK_THROWS_AS(Matching({{0, 1}, {1, 2}}), std::invalid_argument);

    Graph c4 = make_cycle(4);
    CHECK(c4.is_bipartite());
    CHECK(!make_cycle(5).is_bipartite());
    CHECK(is_unicyclic(c4));
    CHECK(!is_unicyclic(make_path(4)));
    CHECK(!is_unicyclic(make_complete(4)));
}
