#include "pvc/graph.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"

using namespace pvc;

TEST_CASE("parse smallest graph") {
    Graph g = parse_graph("p pvc 2 1\ne 1 2\n");
    CHECK(g.n() == 2);
    CHECK(g.m() == 1);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(g.unit_weights());
}

TEST_CASE("parse edgeless graph") {
    Graph g = parse_graph("p pvc 3 0\n");
    CHECK(g.n() == 3);
    CHECK(g.m() == 0);
}

TEST_CASE("parse rejects self-loop with line number") {
    try {
        parse_graph("p pvc 2 1\ne 1 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
}

TEST_CASE("parse error catalogue") {
    CHECK_THROWS_AS(parse_graph("e 1 2\n"), ParseError);                      // edge before header
    CHECK_THROWS_AS(parse_graph("p pvc 2 1\ne 1 3\n"), ParseError);           // id out of range
    CHECK_THROWS_AS(parse_graph("p pvc 2 2\ne 1 2\ne 2 1\n"), ParseError);    // duplicate edge
    CHECK_THROWS_AS(parse_graph("p pvc 2 1\nw 1 0\ne 1 2\n"), ParseError);    // weight < 1
    CHECK_THROWS_AS(parse_graph("p pvc 2 2\ne 1 2\n"), ParseError);           // edge count mismatch
    CHECK_THROWS_AS(parse_graph("p pvc 2 1\nq 1 2\n"), ParseError);           // unknown directive
    CHECK_THROWS_AS(parse_graph(""), ParseError);                             // empty input
    CHECK_THROWS_AS(parse_graph("p pvc 2 0\np pvc 2 0\n"), ParseError);       // two headers
}

TEST_CASE("comments and weights") {
    Graph g = parse_graph("c hello\np pvc 3 1\nc mid\nw 2 5\ne 2 3\n");
    CHECK(g.weight(1) == 1);
    CHECK(g.weight(2) == 5);
    CHECK_FALSE(g.unit_weights());
    CHECK(g.total_weight() == 7);
}

TEST_CASE("canonical writer sorts and round-trips") {
    // Deliberately scrambled edge orientations and order.
    Graph g(5, {{4, 2}, {1, 5}, {3, 1}}, {1, 3, 1, 1, 2});
    std::string text = write_graph(g);
    CHECK(text == "p pvc 5 3\nw 2 3\nw 5 2\ne 1 3\ne 1 5\ne 2 4\n");

    Graph back = parse_graph(text);
    CHECK(back.n() == g.n());
    CHECK(write_graph(back) == text);
}

TEST_CASE("round-trip identity on random instances") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        Graph g = gen_random_bipartite(1 + seed % 6, 1 + (seed / 2) % 6, 3, 70, seed);
        Graph back = parse_graph(write_graph(g));
        CHECK(back.n() == g.n());
        std::set<std::pair<int, int>> a(g.edges().begin(), g.edges().end());
        std::set<std::pair<int, int>> b(back.edges().begin(), back.edges().end());
        CHECK(a == b);
        CHECK(write_graph(back) == write_graph(g));
    }
}

TEST_CASE("coverage basics") {
    Graph p2 = parse_graph("p pvc 2 1\ne 1 2\n");
    CHECK(coverage(p2, {1}) == 1);
    CHECK(coverage(p2, {}) == 0);
    CHECK_THROWS_AS(coverage(p2, {3}), std::out_of_range);

    Graph fixture = fixture_mnc_counterexample();
    CHECK(coverage(fixture, {4}) == 6);
    CHECK(coverage(fixture, {1, 2, 3}) == 15);
}

TEST_CASE("coverage is monotone and saturates at m") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        Graph g = gen_random_tree(9, 500 + seed);
        std::vector<int> all;
        for (int v = 1; v <= g.n(); ++v) all.push_back(v);
        CHECK(coverage(g, all) == g.m());

        Rng rng(seed);
        std::vector<int> grow;
        int prev = 0;
        for (int v = 1; v <= g.n(); ++v) {
            if (rng.below(2) == 0) continue;
            grow.push_back(v);
            int c = coverage(g, grow);
            CHECK(c >= prev);
            prev = c;
        }
    }
}

TEST_CASE("bipartition of a path") {
    Graph path = parse_graph("p pvc 3 2\ne 1 2\ne 2 3\n");
    BipartiteLabeling lab = bipartition(path);
    CHECK(lab.is_left(1));
    CHECK_FALSE(lab.is_left(2));
    CHECK(lab.is_left(3));
}

TEST_CASE("bipartition rejects a triangle with witness") {
    Graph tri(3, {{1, 2}, {2, 3}, {3, 1}});
    try {
        bipartition(tri);
        FAIL("expected NonBipartiteError");
    } catch (const NonBipartiteError& e) {
        CHECK(e.odd_cycle == std::vector<int>{1, 2, 3});
    }
}

TEST_CASE("bipartition of the marginal counterexample fixture") {
    Graph g = fixture_mnc_counterexample();
    CHECK(g.n() == 16);
    CHECK(g.m() == 19);
    BipartiteLabeling lab = bipartition(g);
    std::set<int> left, right;
    for (int v = 1; v <= 16; ++v) (lab.is_left(v) ? left : right).insert(v);
    CHECK(left == std::set<int>{1, 2, 3, 13, 14, 15, 16});
    CHECK(right == std::set<int>{4, 5, 6, 7, 8, 9, 10, 11, 12});
}

TEST_CASE("bipartition yields zero same-side edges on random inputs") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = seed % 2 ? gen_random_tree(2 + seed % 12, seed)
                           : gen_random_bipartite(1 + seed % 5, 1 + (seed / 3) % 5, 4, 60, seed);
        BipartiteLabeling lab = bipartition(g);
        for (auto [u, v] : g.edges()) CHECK(lab.side[u] != lab.side[v]);
    }
}

TEST_CASE("is_tree") {
    CHECK(is_tree(parse_graph("p pvc 4 3\ne 1 2\ne 2 3\ne 3 4\n")));
    CHECK_FALSE(is_tree(Graph(3, {{1, 2}, {2, 3}, {3, 1}})));
    CHECK_FALSE(is_tree(Graph(4, {{1, 2}, {3, 4}})));  // forest, not tree
    CHECK(is_forest(Graph(4, {{1, 2}, {3, 4}})));
    CHECK(is_tree(Graph(1, {})));
}

TEST_CASE("weighted spider fixture") {
    Graph g = fixture_weighted_spider();
    CHECK(g.n() == 9);
    CHECK(g.m() == 8);
    CHECK(g.weight(5) == 2);
    CHECK(g.weight(4) == 1);
    CHECK(is_tree(g));
    CHECK(coverage(g, {4}) == 4);
}

TEST_CASE("random tree generator contract") {
    CHECK(gen_random_tree(1, 3).m() == 0);
    CHECK(gen_random_tree(2, 3).edges() == std::vector<std::pair<int, int>>{{1, 2}});
    CHECK_THROWS_AS(gen_random_tree(0, 1), std::invalid_argument);
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = gen_random_tree(2 + seed % 15, seed);
        CHECK(is_tree(g));
    }
    CHECK(write_graph(gen_random_tree(8, 7)) == write_graph(gen_random_tree(8, 7)));
}

TEST_CASE("random bipartite generator contract") {
    CHECK(gen_random_bipartite(3, 3, 0, 80, 1).m() == 0);
    CHECK(gen_random_bipartite(1, 1, 1, 100, 1).m() <= 1);
    CHECK_THROWS_AS(gen_random_bipartite(0, 2, 3, 50, 1), std::invalid_argument);
    for (uint64_t seed = 0; seed < 40; ++seed) {
        int maxdeg = 1 + seed % 4;
        Graph g = gen_random_bipartite(1 + seed % 6, 1 + (seed / 2) % 6, maxdeg, 75, seed);
        CHECK_NOTHROW(bipartition(g));
        for (int v = 1; v <= g.n(); ++v) CHECK(g.degree(v) <= maxdeg);
    }
    CHECK(write_graph(gen_random_bipartite(5, 5, 3, 60, 9)) ==
          write_graph(gen_random_bipartite(5, 5, 3, 60, 9)));
}

TEST_CASE("graph construction rejects bad input") {
    CHECK_THROWS_AS(Graph(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{1, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{1, 2}}, {1, 0}), std::invalid_argument);
}
