#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>

#include "ramsey/board.hpp"

namespace ramsey {

// A Builder proposes the next uncolored edge given the full board. observe()
// is called after every applied move (with the post-move graph) so stateful
// strategies can keep their bookkeeping in step. clone() supports the
// exhaustive checkers, which fork the game at every Painter reply.
class BuilderStrategy {
public:
    virtual ~BuilderStrategy() = default;
    virtual std::pair<int, int> propose(const ColoredGraph& g) = 0;
    virtual void observe(const ColoredGraph& g, int u, int v, Color c) {
        (void)g; (void)u; (void)v; (void)c;
    }
    virtual std::unique_ptr<BuilderStrategy> clone() const = 0;
    virtual std::string id() const = 0;
};

// A Painter colors the proposed edge. choose() sees the pre-move graph;
// observe() the post-move graph.
class PainterStrategy {
public:
    virtual ~PainterStrategy() = default;
    virtual Color choose(const ColoredGraph& g, int u, int v) = 0;
    virtual void observe(const ColoredGraph& g, int u, int v, Color c) {
        (void)g; (void)u; (void)v; (void)c;
    }
    virtual std::unique_ptr<PainterStrategy> clone() const = 0;
    virtual std::string id() const = 0;
};

// --- baseline strategies ----------------------------------------------------

class AllRedPainter final : public PainterStrategy {
public:
    Color choose(const ColoredGraph&, int, int) override { return Color::Red; }
    std::unique_ptr<PainterStrategy> clone() const override {
        return std::make_unique<AllRedPainter>(*this);
    }
    std::string id() const override { return "allred"; }
};

class AllBluePainter final : public PainterStrategy {
public:
    Color choose(const ColoredGraph&, int, int) override { return Color::Blue; }
    std::unique_ptr<PainterStrategy> clone() const override {
        return std::make_unique<AllBluePainter>(*this);
    }
    std::string id() const override { return "allblue"; }
};

class RandomPainter final : public PainterStrategy {
public:
    explicit RandomPainter(std::uint64_t seed) : rng_(seed) {}
    Color choose(const ColoredGraph&, int, int) override {
        return (rng_() & 1) ? Color::Red : Color::Blue;
    }
    std::unique_ptr<PainterStrategy> clone() const override {
        return std::make_unique<RandomPainter>(*this);
    }
    std::string id() const override { return "random"; }

private:
    std::mt19937_64 rng_;
};

// Proposes a uniformly random unselected edge among the touched vertices
// plus up to two fresh ones. Deterministic per seed.
class RandomBuilder final : public BuilderStrategy {
public:
    explicit RandomBuilder(std::uint64_t seed) : rng_(seed) {}
    std::pair<int, int> propose(const ColoredGraph& g) override;
    std::unique_ptr<BuilderStrategy> clone() const override {
        return std::make_unique<RandomBuilder>(*this);
    }
    std::string id() const override { return "random"; }

private:
    std::mt19937_64 rng_;
};

// Proposes every pair of {0..board-1} in lexicographic order; a degenerate
// adversary that floods the Painter with all edges.
class SweepBuilder final : public BuilderStrategy {
public:
    explicit SweepBuilder(int board) : board_(board) {}
    std::pair<int, int> propose(const ColoredGraph& g) override;
    std::unique_ptr<BuilderStrategy> clone() const override {
        return std::make_unique<SweepBuilder>(*this);
    }
    std::string id() const override { return "sweep"; }

private:
    int board_;
    int u_ = 0, v_ = 1;
};

}  // namespace ramsey
