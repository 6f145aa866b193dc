#include "ramsey/strategy.hpp"

#include "ramsey/errors.hpp"

namespace ramsey {

std::pair<int, int> RandomBuilder::propose(const ColoredGraph& g) {
    std::vector<int> verts = g.touched_vertices();
    for (int f : g.fresh_vertices(2)) verts.push_back(f);
    const auto n = static_cast<std::uint64_t>(verts.size());
    const std::uint64_t pairs = n * (n - 1) / 2;
    std::uniform_int_distribution<std::uint64_t> dist(0, pairs - 1);
    // The two fresh vertices guarantee plenty of free pairs; rejection
    // sampling terminates fast and stays seed-deterministic.
    while (true) {
        std::uint64_t idx = dist(rng_);
        std::uint64_t i = 0;
        std::uint64_t row = n - 1;
        while (idx >= row) {
            idx -= row;
            --row;
            ++i;
        }
        const std::uint64_t j = i + 1 + idx;
        const int u = verts[i];
        const int v = verts[j];
        if (!g.has_edge(u, v)) return {u, v};
    }
}

std::pair<int, int> SweepBuilder::propose(const ColoredGraph& g) {
    while (u_ < board_ - 1) {
        if (v_ >= board_) {
            ++u_;
            v_ = u_ + 1;
            continue;
        }
        const int u = u_;
        const int v = v_;
        ++v_;
        if (!g.has_edge(u, v)) return {u, v};
    }
    throw StrategyError("sweep builder: board exhausted");
}

}  // namespace ramsey
