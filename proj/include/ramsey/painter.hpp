#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>

#include "ramsey/board.hpp"
#include "ramsey/golden.hpp"
#include "ramsey/strategy.hpp"

namespace ramsey {

// Potential machinery. For a red-bipartite component with sides (V1, V2):
//   p(Vi) = |Vi|*phi + |E[Vi]|
//   f     = g(p(V1), p(V2))
// where g(x,y) = phi*max(x,y) - phi + max(max(x,y) - phi^3, min(x,y)).
// Isolated vertices contribute 0 and the graph potential is the sum over
// components.
GoldenNumber g_fun(const GoldenNumber& x, const GoldenNumber& y);

// Potential of one component (any vertex of it names it). 0 is never
// returned here because untouched vertices are not components; throws
// NotRedBipartiteError on a parity-contradicted component.
GoldenNumber component_potential(const ColoredGraph& g, int root);

// Sum of component potentials over the whole board.
GoldenNumber graph_potential(const ColoredGraph& g);

// The Painter's color for edge {u,v} on graph g, by the exhaustive case
// analysis over component membership and side potentials. Pure function of
// the position; the class below wraps it as a strategy with the per-round
// potential-growth check.
Color potential_choice(const ColoredGraph& g, int u, int v);

// Among the colors that keep the graph red-bipartite, one minimizing the
// potential growth (ties go red). Used as an independent cross-check.
Color greedy_color_oracle(const ColoredGraph& g, int u, int v);

// Rounds any Builder needs before a side of some component reaches n
// vertices and m inner edges: ceil(phi*n + m - 2*phi + 1).
// Requires n-1 <= m <= n(n-1)/2; throws InvalidTargetError otherwise.
std::int64_t lower_bound(int n, int m);
GoldenNumber lower_bound_exact(int n, int m);

// The strategy: keeps the board red-bipartite forever and never lets the
// potential grow by more than phi + 1 in a round. Both facts are enforced
// at runtime after every observed move; a violation is a defect and throws
// InvariantViolation.
class PotentialPainter final : public PainterStrategy {
public:
    explicit PotentialPainter(bool check_invariants = true) : check_(check_invariants) {}

    Color choose(const ColoredGraph& g, int u, int v) override;
    void observe(const ColoredGraph& g, int u, int v, Color c) override;

    std::unique_ptr<PainterStrategy> clone() const override {
        return std::make_unique<PotentialPainter>(*this);
    }
    std::string id() const override { return "potential"; }

    const GoldenNumber& total_potential() const { return f_total_; }
    // Recomputation from scratch; equals the cached total at all times.
    GoldenNumber recompute_total(const ColoredGraph& g) const { return graph_potential(g); }
    const GoldenNumber& last_delta() const { return last_delta_; }

private:
    bool check_;
    GoldenNumber f_total_{0, 0};
    GoldenNumber last_delta_{0, 0};
    // Potential of the two components about to be joined, captured in
    // choose() so observe() can account the delta locally.
    std::optional<GoldenNumber> pending_before_;
};

// greedy_color_oracle as a playable strategy.
class GreedyPainter final : public PainterStrategy {
public:
    Color choose(const ColoredGraph& g, int u, int v) override {
        return greedy_color_oracle(g, u, v);
    }
    std::unique_ptr<PainterStrategy> clone() const override {
        return std::make_unique<GreedyPainter>(*this);
    }
    std::string id() const override { return "greedy"; }
};

}  // namespace ramsey
