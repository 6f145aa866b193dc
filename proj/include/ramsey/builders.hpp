#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ramsey/board.hpp"
#include "ramsey/solver.hpp"
#include "ramsey/strategy.hpp"

namespace ramsey {

// Builder's bookkeeping for one colored path. A brb-path P(s,t) is a blue
// path on s vertices and a blue path on t vertices joined end-to-end by one
// red edge (s >= t >= 1); a pure blue path has t = 0 and no vertex touching
// a red edge. The imbalance u = s - t drives the stage-2 accounting.
struct PathRecord {
    enum class Kind { PureBlue, Brb };
    Kind kind = Kind::PureBlue;
    int s = 1;
    int t = 0;
    int end_s = -1;  // outer endpoint of the s-side blue part
    int end_t = -1;  // outer endpoint of the t-side part (other end when pure)
    int red_s = -1;  // red edge endpoint on the s side (brb only)
    int red_t = -1;  // red edge endpoint on the t side (brb only)
    int created = -1;  // round in which the record became a brb-path

    int imbalance() const { return s - t; }
    bool balanced() const { return kind == Kind::Brb && s == t; }
    int vertices() const { return s + t; }
};

// Interactive path merger: starting from a blue path of `base_len` vertices
// with free end `merge_end`, records are consumed last-first; each costs at
// most two proposals and either extends the blue path by its s (or t) part
// or finishes with a red triangle. Whatever the replies, the final blue
// path reaches base_len plus the sum of the records' t parts.
class Phase2Merger {
public:
    Phase2Merger() = default;
    // `records` in creation order; consumed from the back.
    Phase2Merger(int base_len, int merge_end, std::vector<PathRecord> records);

    // Validates the merge preconditions against the actual board: records
    // are vertex-disjoint brb-paths / pure paths of the recorded shape.
    // Throws PreconditionError.
    static void validate_records(const ColoredGraph& g, const std::vector<PathRecord>& records);

    bool done() const { return queue_.empty() && !mid_; }
    std::pair<int, int> propose();
    void observe(int u, int v, Color c);

    int blue_len() const { return blue_len_; }
    int merge_end() const { return merge_end_; }
    int proposals() const { return proposals_; }
    bool red_triangle_hit() const { return red_triangle_; }

private:
    std::vector<PathRecord> queue_;
    PathRecord cur_;
    int blue_len_ = 0;
    int merge_end_ = -1;
    bool mid_ = false;        // first try answered red; second pending
    bool active_ = false;     // cur_ holds the record being merged
    bool red_triangle_ = false;
    int proposals_ = 0;
};

// Smallest k with 1 <= k <= n and m <= n - k + C(floor(k/2),2) + C(ceil(k/2),2).
// Requires n >= 3 and n <= m <= (n-1)^2/4.
int compute_k(int n, int m);
long long theorem5_round_bound(int n, int m);  // 3n + C(k,2) - k - 3

// Two-stage Builder forcing a red triangle or a blue n-vertex path within
// 3n - 4 rounds, playing on vertices 0..2n-2. Stage 1 repeatedly connects
// the two shortest pure blue paths; if the first n-3 answers are all red it
// detours through a 5-vertex subroutine that forces a blue 3-path, and
// stage 2 merges the accumulated records. Structural facts about pure path
// sizes and brb imbalances are asserted every round when checks are on.
class Theorem3Builder final : public BuilderStrategy {
public:
    explicit Theorem3Builder(int n, bool check_invariants = true);

    std::pair<int, int> propose(const ColoredGraph& g) override;
    void observe(const ColoredGraph& g, int u, int v, Color c) override;
    std::unique_ptr<BuilderStrategy> clone() const override {
        return std::make_unique<Theorem3Builder>(*this);
    }
    std::string id() const override { return "theorem3"; }

    int rounds_seen() const { return round_; }
    int round_bound() const { return 3 * n_ - 4; }

private:
    enum class Stage { Stage1, K5, Merge, Done };

    void stage1_transitions(const ColoredGraph& g);
    void enter_k5(const ColoredGraph& g);
    void finish_k5(const ColoredGraph& g);
    void enter_merge_normal();
    void check_stage1_round_invariants() const;
    void check_stage1_end_invariants() const;

    int n_;
    bool check_;
    Stage stage_ = Stage::Stage1;
    int round_ = 0;
    bool all_red_ = true;

    std::vector<PathRecord> pure_;
    std::vector<PathRecord> brb_;  // creation order

    // pending stage-1 join
    int join_a_ = -1, join_b_ = -1;  // indices into pure_
    int join_x_ = -1, join_y_ = -1;  // proposed endpoints (x in a, y in b)

    // K5 subroutine
    std::vector<int> k5_verts_;
    int k5_node_ = -1;

    Phase2Merger merger_;
};

// Builder for the connected target: drives the two-stage builder until a
// blue path on n vertices exists (or the game ends red), then fills in all
// pairs inside the first k vertices of that path; the triangle-free bound
// on the red part forces the blue edge quota. Ends within
// 3n + C(k,2) - k - 3 rounds.
class Theorem5Builder final : public BuilderStrategy {
public:
    Theorem5Builder(int n, int m, bool check_invariants = true);

    std::pair<int, int> propose(const ColoredGraph& g) override;
    void observe(const ColoredGraph& g, int u, int v, Color c) override;
    std::unique_ptr<BuilderStrategy> clone() const override {
        return std::make_unique<Theorem5Builder>(*this);
    }
    std::string id() const override { return "theorem5"; }

    int k() const { return k_; }
    long long round_bound() const;

private:
    enum class Phase { Growing, Turan };

    void enter_turan(const ColoredGraph& g);

    int n_;
    int m_;
    int k_ = 0;  // 0 while m = n-1 (no completion phase needed)
    Phase phase_ = Phase::Growing;
    Theorem3Builder t3_;
    std::vector<std::pair<int, int>> turan_;
    std::size_t turan_next_ = 0;
};

}  // namespace ramsey
