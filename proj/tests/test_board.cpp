#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ramsey/board.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/oracles.hpp"

using namespace ramsey;

TEST_CASE("add_edge basics and errors") {
    ColoredGraph g;
    g.add_edge(0, 1, Color::Red);
    CHECK(g.red_bipartite());
    auto [s1, s2] = g.red_bipartition(g.component_root(0));
    CHECK(s1 == std::vector<int>{0});
    CHECK(s2 == std::vector<int>{1});
    CHECK_THROWS_AS(g.add_edge(2, 2, Color::Red), LoopEdgeError);
    CHECK_THROWS_AS(g.add_edge(1, 0, Color::Blue), DuplicateEdgeError);
}

TEST_CASE("red path closed red makes a red triangle, closed blue stays bipartite") {
    ColoredGraph g;
    g.add_edge(0, 1, Color::Red);
    g.add_edge(1, 2, Color::Red);
    {
        ColoredGraph h = g;
        h.add_edge(0, 2, Color::Red);
        CHECK_FALSE(h.red_bipartite());
        CHECK(h.has_red_triangle());
        CHECK(h.has_red_odd_cycle());
    }
    {
        ColoredGraph h = g;
        h.add_edge(0, 2, Color::Blue);
        CHECK(h.red_bipartite());
        auto [s1, s2] = h.red_bipartition(h.component_root(0));
        CHECK(s1 == std::vector<int>{0, 2});
        CHECK(s2 == std::vector<int>{1});
    }
}

TEST_CASE("single blue edge has an empty second side") {
    ColoredGraph g;
    g.add_edge(0, 1, Color::Blue);
    auto [s1, s2] = g.red_bipartition(g.component_root(0));
    CHECK(s1 == std::vector<int>{0, 1});
    CHECK(s2.empty());
    const auto stats = g.side_stats(0);
    CHECK(stats.v1 == 2);
    CHECK(stats.e1 == 1);
    CHECK(stats.v2 == 0);
    CHECK(stats.e2 == 0);
}

TEST_CASE("alternating 4-cycle bipartition matches brute force") {
    ColoredGraph g;
    g.add_edge(0, 1, Color::Red);
    g.add_edge(1, 2, Color::Blue);
    g.add_edge(2, 3, Color::Red);
    g.add_edge(3, 0, Color::Blue);
    CHECK(g.red_bipartite());
    auto [s1, s2] = g.red_bipartition(g.component_root(0));
    CHECK(s1 == std::vector<int>{0, 3});
    CHECK(s2 == std::vector<int>{1, 2});
}

TEST_CASE("red odd cycle detection is red-only") {
    // C5 with four red edges and one blue: even red count on the cycle, so
    // the graph is red-bipartite and the red subgraph (a path) is acyclic.
    ColoredGraph g;
    g.add_edge(0, 1, Color::Red);
    g.add_edge(1, 2, Color::Red);
    g.add_edge(2, 3, Color::Red);
    g.add_edge(3, 4, Color::Red);
    g.add_edge(4, 0, Color::Blue);
    CHECK_FALSE(g.has_red_odd_cycle());
    CHECK(g.red_bipartite());
    // Swapping one inner edge to blue makes the cycle's red count odd.
    ColoredGraph h;
    h.add_edge(0, 1, Color::Red);
    h.add_edge(1, 2, Color::Red);
    h.add_edge(2, 3, Color::Red);
    h.add_edge(3, 4, Color::Blue);
    h.add_edge(4, 0, Color::Blue);
    CHECK_FALSE(h.red_bipartite());
    CHECK_FALSE(h.has_red_odd_cycle());
}

TEST_CASE("the empty board is quiet") {
    ColoredGraph g;
    CHECK_FALSE(g.has_red_odd_cycle());
    CHECK(g.red_bipartite());
    CHECK(g.longest_blue_path() == 1);  // the infinite board always has a vertex
    CHECK(g.edge_count() == 0);
    CHECK(g.component_roots().empty());
}

TEST_CASE("longest blue path on small shapes") {
    ColoredGraph path;
    for (int i = 0; i < 4; ++i) path.add_edge(i, i + 1, Color::Blue);
    CHECK(path.longest_blue_path() == 5);

    ColoredGraph cyc;
    cyc.add_edge(0, 1, Color::Blue);
    cyc.add_edge(1, 2, Color::Blue);
    cyc.add_edge(2, 3, Color::Blue);
    cyc.add_edge(3, 0, Color::Blue);
    CHECK(cyc.longest_blue_path() == 4);

    ColoredGraph star;
    star.add_edge(0, 1, Color::Blue);
    star.add_edge(0, 2, Color::Blue);
    star.add_edge(0, 3, Color::Blue);
    CHECK(star.longest_blue_path() == 3);

    ColoredGraph reds;
    reds.add_edge(0, 1, Color::Red);
    CHECK(reds.longest_blue_path() == 1);
}

TEST_CASE("best connected blue subgraph on small shapes") {
    ColoredGraph p4;
    p4.add_edge(0, 1, Color::Blue);
    p4.add_edge(1, 2, Color::Blue);
    p4.add_edge(2, 3, Color::Blue);
    CHECK(p4.best_connected_blue_subgraph(3) == 2);

    ColoredGraph k4;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j, Color::Blue);
    CHECK(k4.best_connected_blue_subgraph(3) == 3);

    ColoredGraph k4m;
    k4m.add_edge(0, 1, Color::Blue);
    k4m.add_edge(0, 2, Color::Blue);
    k4m.add_edge(0, 3, Color::Blue);
    k4m.add_edge(1, 2, Color::Blue);
    k4m.add_edge(1, 3, Color::Blue);  // K4 minus {2,3}
    CHECK(k4m.best_connected_blue_subgraph(3) == 3);

    ColoredGraph tiny;
    tiny.add_edge(0, 1, Color::Blue);
    CHECK(tiny.best_connected_blue_subgraph(3) == std::nullopt);
}

TEST_CASE("auxiliary target condition") {
    // Odd-red-parity cycle: first clause fires.
    ColoredGraph odd;
    odd.add_edge(0, 1, Color::Red);
    odd.add_edge(1, 2, Color::Red);
    odd.add_edge(0, 2, Color::Red);
    CHECK(odd.aux_target_reached(100, 100));

    // A blue path on n vertices: one side is the whole component.
    ColoredGraph path;
    for (int i = 0; i < 4; ++i) path.add_edge(i, i + 1, Color::Blue);
    CHECK(path.aux_target_reached(5, 4));
    CHECK_FALSE(path.aux_target_reached(5, 5));

    ColoredGraph red1;
    red1.add_edge(0, 1, Color::Red);
    CHECK_FALSE(red1.aux_target_reached(2, 1));
    CHECK_FALSE(red1.aux_target_reached(2, 0));  // both sides have a single vertex
    CHECK(red1.aux_target_reached(1, 0));
}

TEST_CASE("referee distinguishes the families") {
    TargetSpec c3p5 = TargetSpec::c3_vs_path(5);
    ColoredGraph tri;
    tri.add_edge(0, 1, Color::Red);
    tri.add_edge(1, 2, Color::Red);
    tri.add_edge(0, 2, Color::Red);
    CHECK(tri.referee(c3p5).red_hit);
    CHECK_FALSE(tri.referee(c3p5).blue_hit);

    ColoredGraph p5;
    for (int i = 0; i < 4; ++i) p5.add_edge(i, i + 1, Color::Blue);
    CHECK(p5.referee(c3p5).blue_hit);

    TargetSpec con = TargetSpec::codd_vs_con(3, 2);
    ColoredGraph two;
    two.add_edge(0, 1, Color::Red);
    two.add_edge(2, 3, Color::Red);
    const auto verdict = two.referee(con);
    CHECK_FALSE(verdict.over());
}

TEST_CASE("red-bipartite flag matches brute force on random graphs") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 1500; ++i) {
        const auto edges = oracles::random_colored_graph(rng, 8, 12);
        const auto g = oracles::graph_from(edges);
        CHECK(g.red_bipartite() == oracles::brute_red_bipartite(edges));
    }
}

TEST_CASE("longest blue path matches exhaustive enumeration") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 400; ++i) {
        const auto edges = oracles::random_colored_graph(rng, 10, 14);
        const auto g = oracles::graph_from(edges);
        CHECK(g.longest_blue_path() == oracles::brute_longest_path(edges, Color::Blue));
    }
}

TEST_CASE("best connected blue subgraph matches exhaustive enumeration") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 400; ++i) {
        const auto edges = oracles::random_colored_graph(rng, 9, 13);
        const auto g = oracles::graph_from(edges);
        const int n = 1 + static_cast<int>(rng() % 9);
        CHECK(g.best_connected_blue_subgraph(n) == oracles::brute_best_connected_blue(edges, n));
    }
}

TEST_CASE("copies are independent positions") {
    std::mt19937_64 rng(34);
    for (int i = 0; i < 200; ++i) {
        const auto edges = oracles::random_colored_graph(rng, 8, 10);
        const auto g = oracles::graph_from(edges);
        ColoredGraph copy = g;
        int u = static_cast<int>(rng() % 12), v = static_cast<int>(rng() % 12);
        if (u == v || copy.has_edge(u, v)) continue;
        copy.add_edge(u, v, (rng() & 1) ? Color::Red : Color::Blue);
        CHECK(g == oracles::graph_from(edges));
        CHECK_FALSE(copy == g);
    }
}

TEST_CASE("resource cap trips on oversized blue components") {
    ColoredGraph::Limits limits;
    limits.component_cap = 10;
    ColoredGraph g(limits);
    for (int i = 0; i < 12; ++i) g.add_edge(i, i + 1, Color::Blue);
    CHECK_THROWS_AS(g.longest_blue_path(), ResourceLimitError);
}
