#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ramsey/errors.hpp"
#include "ramsey/oracles.hpp"
#include "ramsey/solver.hpp"

using namespace ramsey;

namespace {

// Independent plain minimax: no memoization, no canonicalization, no
// pruning; duplicates the move rule directly from its statement.
constexpr int kPlainNoWin = 1 << 20;

std::vector<std::pair<int, int>> plain_moves(const ColoredGraph& g) {
    std::vector<std::pair<int, int>> out;
    const auto touched = g.touched_vertices();
    for (std::size_t i = 0; i < touched.size(); ++i)
        for (std::size_t j = i + 1; j < touched.size(); ++j)
            if (!g.has_edge(touched[i], touched[j])) out.emplace_back(touched[i], touched[j]);
    const auto fresh = g.fresh_vertices(2);
    for (int v : touched) out.emplace_back(std::min(v, fresh[0]), std::max(v, fresh[0]));
    out.emplace_back(fresh[0], fresh[1]);
    return out;
}

int plain_minimax(const ColoredGraph& g, const TargetSpec& t, int rem) {
    if (g.referee(t).over()) return 0;
    if (rem == 0) return kPlainNoWin;
    int best = kPlainNoWin;
    for (const auto& [u, v] : plain_moves(g)) {
        int worst = 0;
        for (Color c : {Color::Red, Color::Blue}) {
            ColoredGraph child = g;
            child.add_edge(u, v, c);
            worst = std::max(worst, plain_minimax(child, t, rem - 1));
            if (worst >= kPlainNoWin) break;
        }
        if (worst < kPlainNoWin) best = std::min(best, 1 + worst);
    }
    return best == kPlainNoWin ? kPlainNoWin : best;
}

}  // namespace

TEST_CASE("canonical form is label-invariant") {
    ColoredGraph a, b;
    a.add_edge(0, 1, Color::Red);
    b.add_edge(5, 9, Color::Red);
    CHECK(canonical_form(a) == canonical_form(b));
    ColoredGraph c;
    c.add_edge(5, 9, Color::Blue);
    CHECK(canonical_form(a) != canonical_form(c));
}

TEST_CASE("canonical form sees path reversal symmetry") {
    ColoredGraph a, b;
    a.add_edge(0, 1, Color::Red);
    a.add_edge(1, 2, Color::Blue);
    b.add_edge(0, 1, Color::Blue);
    b.add_edge(1, 2, Color::Red);
    CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("triangle colorings land in exactly 4 classes") {
    std::set<std::string> keys;
    for (int mask = 0; mask < 8; ++mask) {
        ColoredGraph g;
        const int e[3][2] = {{0, 1}, {1, 2}, {0, 2}};
        for (int i = 0; i < 3; ++i)
            g.add_edge(e[i][0], e[i][1], (mask >> i) & 1 ? Color::Red : Color::Blue);
        keys.insert(canonical_form(g));
    }
    CHECK(keys.size() == 4);
}

TEST_CASE("canonical form vs brute-force isomorphism") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 800; ++i) {
        auto e1 = oracles::random_colored_graph(rng, 7, 9);
        oracles::EdgeList e2;
        if (rng() & 1) {
            std::vector<int> perm(9);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            for (const auto& [u, v, c] : e1) e2.emplace_back(perm[u], perm[v], c);
            std::shuffle(e2.begin(), e2.end(), rng);
        } else {
            e2 = oracles::random_colored_graph(rng, 7, 9);
        }
        if (e1.empty() || e2.empty()) continue;
        CHECK((canonical_form(oracles::graph_from(e1)) ==
               canonical_form(oracles::graph_from(e2))) == oracles::brute_isomorphic(e1, e2));
    }
}

TEST_CASE("canonical form on highly symmetric shapes") {
    // All-red 8-cycle vs a rotated, shuffled copy.
    auto cycle = [](const std::vector<int>& order, int blue_at) {
        ColoredGraph g;
        const int n = static_cast<int>(order.size());
        for (int i = 0; i < n; ++i)
            g.add_edge(order[i], order[(i + 1) % n],
                       i == blue_at ? Color::Blue : Color::Red);
        return g;
    };
    const std::vector<int> a{0, 1, 2, 3, 4, 5, 6, 7};
    const std::vector<int> b{13, 5, 9, 0, 2, 7, 21, 11};
    CHECK(canonical_form(cycle(a, -1)) == canonical_form(cycle(b, -1)));
    // One blue edge anywhere on the cycle is the same graph up to rotation.
    CHECK(canonical_form(cycle(a, 0)) == canonical_form(cycle(b, 5)));
    CHECK(canonical_form(cycle(a, -1)) != canonical_form(cycle(a, 3)));
    // Same-size same-color star vs path differ.
    ColoredGraph star, path;
    for (int leaf = 1; leaf <= 7; ++leaf) star.add_edge(0, leaf, Color::Red);
    for (int i = 0; i < 7; ++i) path.add_edge(i, i + 1, Color::Red);
    CHECK(canonical_form(star) != canonical_form(path));
    // Two disjoint red 4-stars vs one relabeling of them.
    ColoredGraph twin1, twin2;
    for (int leaf = 1; leaf <= 3; ++leaf) {
        twin1.add_edge(0, leaf, Color::Red);
        twin1.add_edge(10, 10 + leaf, Color::Red);
        twin2.add_edge(7, 20 + leaf, Color::Red);
        twin2.add_edge(4, leaf, Color::Red);
    }
    CHECK(canonical_form(twin1) == canonical_form(twin2));
}

TEST_CASE("canonical form rejects oversized graphs") {
    ColoredGraph g;
    for (int i = 0; i < 9; ++i) g.add_edge(2 * i, 2 * i + 1, Color::Red);
    CHECK(g.touched_count() == 18);
    CHECK_THROWS_AS(canonical_form(g), ResourceLimitError);
}

TEST_CASE("solve recovers the verified value for C3 vs P3") {
    const SolveResult r = solve(TargetSpec::c3_vs_path(3), 6);
    REQUIRE(r.value.has_value());
    CHECK(*r.value == 5);
    // Budget slack never changes the value: deepening stops at the optimum.
    const SolveResult slack = solve(TargetSpec::c3_vs_path(3), 12);
    CHECK(slack.value == r.value);
}

TEST_CASE("restricted boards") {
    {
        SolveOptions opt;
        opt.board = 5;
        Solver s(TargetSpec::c3_vs_path(3), opt);
        const SolveResult r = s.solve(5);
        REQUIRE(r.value.has_value());
        CHECK(*r.value == 5);
        const StrategyTree tree = s.extract_strategy(r);
        CHECK(tree.depth() <= 5);
        CHECK(replay_strategy_tree(tree, TargetSpec::c3_vs_path(3), 5));
    }
    {
        const SolveResult r = solve_restricted(TargetSpec::c3_vs_path(3), 12, 2);
        CHECK_FALSE(r.value.has_value());  // one edge fits on K2, no target does
    }
    {
        const SolveResult r = solve(TargetSpec::c3_vs_path(3), 0);
        CHECK_FALSE(r.value.has_value());
    }
}

TEST_CASE("cross-literature values for red P3") {
    const SolveResult a = solve(TargetSpec::redpath_vs_path(3, 3), 5);
    REQUIRE(a.value.has_value());
    CHECK(*a.value == 3);  // ceil(5*(3-1)/4)
    const SolveResult b = solve(TargetSpec::redpath_vs_path(3, 4), 6);
    REQUIRE(b.value.has_value());
    CHECK(*b.value == 4);  // ceil(5*(4-1)/4)
}

TEST_CASE("strategy extraction replays for P3 vs P3") {
    Solver s(TargetSpec::redpath_vs_path(3, 3));
    const SolveResult r = s.solve(4);
    REQUIRE(r.value.has_value());
    CHECK(*r.value == 3);
    const StrategyTree tree = s.extract_strategy(r);
    CHECK(tree.depth() == 3);
    CHECK(replay_strategy_tree(tree, TargetSpec::redpath_vs_path(3, 3), 3));
    CHECK_FALSE(tree.str().empty());
}

TEST_CASE("already-won position yields a bare leaf") {
    // A blue path on one vertex exists on the infinite board outright.
    TargetSpec t;
    t.red = TargetSpec::RedFamily::TriangleOnly;
    t.blue = TargetSpec::BlueFamily::Path;
    t.n = 1;
    t.m = 0;
    Solver s(t);
    const SolveResult r = s.solve(1);
    REQUIRE(r.value.has_value());
    CHECK(*r.value == 0);
    const StrategyTree tree = s.extract_strategy(r);
    CHECK(tree.depth() == 0);
    CHECK(tree.nodes.at(tree.root).leaf());
}

TEST_CASE("memoized search equals plain minimax at small budgets") {
    for (int budget = 1; budget <= 4; ++budget) {
        {
            const TargetSpec t = TargetSpec::redpath_vs_path(3, 3);
            const int plain = plain_minimax(ColoredGraph(), t, budget);
            const SolveResult r = solve(t, budget);
            if (plain == kPlainNoWin) CHECK_FALSE(r.value.has_value());
            else CHECK(r.value.value_or(-1) == plain);
        }
        {
            const TargetSpec t = TargetSpec::c3_vs_path(3);
            const int plain = plain_minimax(ColoredGraph(), t, budget);
            const SolveResult r = solve(t, budget);
            if (plain == kPlainNoWin) CHECK_FALSE(r.value.has_value());
            else CHECK(r.value.value_or(-1) == plain);
        }
    }
}

TEST_CASE("solver consistency: full board model vs 2n-1 restriction") {
    const SolveResult free3 = solve(TargetSpec::c3_vs_path(3), 6);
    const SolveResult rest3 = solve_restricted(TargetSpec::c3_vs_path(3), 6, 5);
    CHECK(free3.value == rest3.value);
    const SolveResult free4 = solve(TargetSpec::c3_vs_path(4), 9);
    const SolveResult rest4 = solve_restricted(TargetSpec::c3_vs_path(4), 9, 7);
    CHECK(free4.value == rest4.value);
    CHECK(free4.value.value_or(-1) == 8);
}

TEST_CASE("exhaustive painter check agrees with the solve value") {
    // value(c3 vs p3) = 5: a budget-5 tree exists, a budget-4 one does not.
    SolveOptions opt;
    Solver s(TargetSpec::c3_vs_path(3), opt);
    const SolveResult r = s.solve(5);
    REQUIRE(r.value.has_value());
    const StrategyTree tree = s.extract_strategy(r);
    CHECK(replay_strategy_tree(tree, TargetSpec::c3_vs_path(3), 5));
    CHECK_FALSE(replay_strategy_tree(tree, TargetSpec::c3_vs_path(3), 4));
}

TEST_CASE("solver stats are populated") {
    Solver s(TargetSpec::c3_vs_path(3));
    const SolveResult r = s.solve(5);
    CHECK(r.stats.expanded > 0);
    CHECK(r.stats.canon_calls > 0);
}
