#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ramsey/board.hpp"
#include "ramsey/strategy.hpp"

namespace ramsey {

// Isomorphism-invariant certificate of a colored graph with isolated
// vertices stripped: per-component canonical labelings (color-aware degree
// refinement plus backtracking with discovered-automorphism pruning),
// combined as the sorted multiset of component codes. Two graphs map to the
// same string iff they are color-preserving isomorphic after deleting
// isolated vertices. Full certificate, not a hash.
// Throws ResourceLimitError beyond 16 non-isolated vertices.
std::string canonical_form(const ColoredGraph& g);

// Builder decision tree: internal nodes propose an edge and branch on the
// Painter's color; leaves record the winning family and the round count.
struct StrategyTree {
    struct Node {
        int u = -1, v = -1;      // proposed edge (internal nodes)
        int on_red = -1;         // child indices
        int on_blue = -1;
        char winner = 0;         // 'r' or 'b' at leaves
        int round = -1;          // round of the win at leaves
        bool leaf() const { return u < 0; }
    };
    std::vector<Node> nodes;
    int root = -1;

    bool empty() const { return root < 0; }
    int depth() const;
    // Line format: internal nodes "edge u v ?", branches "R -> ..." and
    // "B -> ...", leaves "WIN red|blue round t".
    void write(std::ostream& os) const;
    std::string str() const;
};

// Replays the tree against every Painter reply sequence on a fresh board:
// every line must reach the recorded win within `bound` rounds.
bool replay_strategy_tree(const StrategyTree& tree, const TargetSpec& target, int bound);

struct SolveOptions {
    int board = 0;                  // 0 = unrestricted board (fresh-vertex orbits)
    long long state_cap = 0;        // expanded-state cap; 0 = env or default
    long long table_cap = 6000000;  // max transposition entries kept
};

struct SolveStats {
    long long expanded = 0;
    long long tt_hits = 0;
    long long canon_calls = 0;
};

struct SolveResult {
    std::optional<int> value;  // nullopt = AboveBudget
    int budget = 0;
    TargetSpec target;
    int board = 0;
    SolveStats stats;
};

// Exact minimax over canonicalized positions: Builder minimizes rounds,
// Painter maximizes; memoized values are absolute (budget-independent),
// searched with iterative deepening from the generic floor
// |E(H1)| + |E(H2)| - 1 and beta-style cutoffs at Painter nodes.
class Solver {
public:
    explicit Solver(TargetSpec target, SolveOptions opt = {});

    SolveResult solve(int budget);

    // Rebuilds the optimal tree for a solved result and verifies it by
    // exhaustive replay. Throws NotSolvedError if the result is AboveBudget.
    StrategyTree extract_strategy(const SolveResult& r);

    const SolveStats& stats() const { return stats_; }

private:
    struct Entry {
        std::int32_t resolved = -1;  // exact value when >= 0
        std::int32_t lower = 0;      // true value >= lower
    };

    static constexpr int kNoWin = 1 << 28;

    int search(const ColoredGraph& g, int rem);
    int build_node(StrategyTree& tree, const ColoredGraph& g, int depth, int value);
    std::vector<std::pair<int, int>> gen_moves(const ColoredGraph& g) const;
    std::string state_key(const ColoredGraph& g);

    TargetSpec target_;
    SolveOptions opt_;
    long long state_cap_ = 0;
    std::unordered_map<std::string, Entry> table_;
    SolveStats stats_;
};

SolveResult solve(const TargetSpec& target, int budget, SolveOptions opt = {});
SolveResult solve_restricted(const TargetSpec& target, int budget, int board,
                             SolveOptions opt = {});

// DFS over all Painter reply sequences: true iff the builder ends the game
// within `bound` rounds against every sequence. The prototype is cloned at
// every branch point.
bool exhaustive_painter_check(const BuilderStrategy& builder_proto, const TargetSpec& target,
                              int bound, std::function<ColoredGraph()> board_factory = {});

// The K5 subroutine: an adaptive tree forcing a red triangle or a blue
// 3-vertex path within 5 proposals on a 5-vertex board, extracted once from
// the exact solution of that restricted game. Vertices are 0..4.
const StrategyTree& k5_blue_p3_tree();

}  // namespace ramsey
