#include "ramsey/painter.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

constexpr GoldenNumber kPhiPlusOne{1, 1};  // phi + 1 = phi^2
constexpr GoldenNumber kOne{0, 1};

// p(side containing w) first, the other side second.
std::pair<GoldenNumber, GoldenNumber> side_potentials_at(const ColoredGraph& g, int w) {
    const auto stats = g.side_stats(w);
    GoldenNumber p1{stats.v1, stats.e1};
    GoldenNumber p2{stats.v2, stats.e2};
    if (g.side_of(w) == 0) return {p1, p2};
    return {p2, p1};
}

}  // namespace

GoldenNumber g_fun(const GoldenNumber& x, const GoldenNumber& y) {
    const GoldenNumber& hi = x >= y ? x : y;
    const GoldenNumber& lo = x >= y ? y : x;
    const GoldenNumber tail = hi - GoldenNumber::phi_cubed();
    return GoldenNumber::phi() * hi - GoldenNumber::phi() + (tail >= lo ? tail : lo);
}

GoldenNumber component_potential(const ColoredGraph& g, int root) {
    if (!g.touched(root)) return {0, 0};  // isolated vertices carry no weight
    const auto stats = g.side_stats(root);
    return g_fun(GoldenNumber{stats.v1, stats.e1}, GoldenNumber{stats.v2, stats.e2});
}

GoldenNumber graph_potential(const ColoredGraph& g) {
    GoldenNumber total{0, 0};
    for (int root : g.component_roots()) total += component_potential(g, root);
    return total;
}

Color potential_choice(const ColoredGraph& g, int u, int v) {
    if (g.has_edge(u, v)) throw DuplicateEdgeError("potential_choice: edge already colored");
    const bool iso_u = !g.touched(u);
    const bool iso_v = !g.touched(v);

    // Both endpoints untouched: red.
    if (iso_u && iso_v) return Color::Red;

    // Exactly one untouched endpoint: blue only when the far side of the
    // touched endpoint's component outweighs its own side by more than
    // phi + 1.
    if (iso_u || iso_v) {
        const int w = iso_u ? v : u;
        auto [p_own, p_other] = side_potentials_at(g, w);
        return p_other > p_own + kPhiPlusOne ? Color::Blue : Color::Red;
    }

    // Same component: the red-bipartition forces the color.
    if (g.component_root(u) == g.component_root(v))
        return g.side_of(u) == g.side_of(v) ? Color::Blue : Color::Red;

    // Two nontrivial components. Compare each endpoint's side to the
    // opposite side of its own component.
    auto [pu, pou] = side_potentials_at(g, u);
    auto [pv, pov] = side_potentials_at(g, v);
    GoldenNumber du = pu - pou;
    GoldenNumber dv = pv - pov;
    if (du.sign() * dv.sign() >= 0) return Color::Red;
    if (du.sign() < 0) {
        std::swap(pu, pv);
        std::swap(pou, pov);
        std::swap(du, dv);
    }
    // Now du > 0 > dv: blue exactly when both gaps clear 1.
    if (du > kOne && (pov - pv) > kOne) return Color::Blue;
    return Color::Red;
}

Color greedy_color_oracle(const ColoredGraph& g, int u, int v) {
    const bool iso_u = !g.touched(u);
    const bool iso_v = !g.touched(v);
    if (!iso_u && !iso_v && g.component_root(u) == g.component_root(v)) {
        // Within a component the red-bipartition forces the legal color.
        return g.side_of(u) == g.side_of(v) ? Color::Blue : Color::Red;
    }
    GoldenNumber before{0, 0};
    if (!iso_u) before += component_potential(g, u);
    if (!iso_v) before += component_potential(g, v);
    GoldenNumber delta_red, delta_blue;
    {
        ColoredGraph t = g;
        t.add_edge(u, v, Color::Red);
        delta_red = component_potential(t, u) - before;
    }
    {
        ColoredGraph t = g;
        t.add_edge(u, v, Color::Blue);
        delta_blue = component_potential(t, u) - before;
    }
    return delta_red <= delta_blue ? Color::Red : Color::Blue;
}

GoldenNumber lower_bound_exact(int n, int m) {
    if (n < 1 || m < n - 1 || static_cast<long long>(m) > static_cast<long long>(n) * (n - 1) / 2)
        throw InvalidTargetError("lower_bound: need n >= 1 and n-1 <= m <= n(n-1)/2");
    // phi*n + m - 2*phi + 1 = (n-2)*phi + (m+1)
    return GoldenNumber{n - 2, static_cast<std::int64_t>(m) + 1};
}

std::int64_t lower_bound(int n, int m) { return lower_bound_exact(n, m).ceil_value(); }

Color PotentialPainter::choose(const ColoredGraph& g, int u, int v) {
    GoldenNumber before{0, 0};
    if (g.touched(u)) before += component_potential(g, u);
    if (g.touched(v) && (!g.touched(u) || g.component_root(u) != g.component_root(v)))
        before += component_potential(g, v);
    pending_before_ = before;
    return potential_choice(g, u, v);
}

void PotentialPainter::observe(const ColoredGraph& g, int u, int v, Color) {
    if (!pending_before_) {
        // observe without a preceding choose: rebase from scratch.
        f_total_ = graph_potential(g);
        last_delta_ = GoldenNumber{0, 0};
        return;
    }
    if (check_ && !g.red_bipartite())
        throw InvariantViolation("potential painter: board lost red-bipartiteness");
    const GoldenNumber after = component_potential(g, u);
    (void)v;
    last_delta_ = after - *pending_before_;
    pending_before_.reset();
    if (check_ && last_delta_ > kPhiPlusOne)
        throw InvariantViolation("potential painter: potential grew by " + last_delta_.str() +
                                 " > phi+1 in one round");
    f_total_ += last_delta_;
}

}  // namespace ramsey
