#include "ramsey/builders.hpp"

#include <algorithm>
#include <set>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

bool is_power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

int other_end(const PathRecord& r, int used) {
    if (used == r.end_s) return r.end_t;
    return r.end_s;
}

std::pair<int, int> ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

// ------------------------------------------------------------- Phase2Merger

Phase2Merger::Phase2Merger(int base_len, int merge_end, std::vector<PathRecord> records)
    : blue_len_(base_len), merge_end_(merge_end) {
    // A record with t = 0 has no red edge and contributes nothing to the
    // guaranteed length; skip it outright.
    queue_.reserve(records.size());
    for (auto& r : records)
        if (r.t >= 1) queue_.push_back(std::move(r));
}

void Phase2Merger::validate_records(const ColoredGraph& g,
                                    const std::vector<PathRecord>& records) {
    std::set<int> seen;
    for (const auto& r : records) {
        if (r.s < r.t || r.t < 0) throw PreconditionError("merger: record needs s >= t >= 0");
        // Walk the blue parts and confirm shape, colors and disjointness.
        auto walk_part = [&](int outer, int inner, int len) {
            // Blue path of `len` vertices from outer end to the red
            // attachment point `inner`.
            int prev = -1;
            int cur = outer;
            for (int i = 0; i < len; ++i) {
                if (!seen.insert(cur).second)
                    throw PreconditionError("merger: records share a vertex");
                if (i == len - 1) {
                    if (cur != inner) throw PreconditionError("merger: part does not end at red edge");
                    return;
                }
                int next = -1;
                for (const auto& [w, c] : g.neighbors(cur))
                    if (c == Color::Blue && w != prev) {
                        if (next != -1) throw PreconditionError("merger: blue part is not a path");
                        next = w;
                    }
                if (next == -1) throw PreconditionError("merger: blue part shorter than recorded");
                prev = cur;
                cur = next;
            }
        };
        if (r.kind == PathRecord::Kind::Brb) {
            if (r.t < 1) throw PreconditionError("merger: brb record needs t >= 1");
            auto col = g.edge_color(r.red_s, r.red_t);
            if (!col || *col != Color::Red)
                throw PreconditionError("merger: recorded red edge missing");
            walk_part(r.end_s, r.red_s, r.s);
            walk_part(r.end_t, r.red_t, r.t);
        } else {
            walk_part(r.end_s, r.end_t, r.s);
        }
    }
}

std::pair<int, int> Phase2Merger::propose() {
    if (done()) throw StageViolationError("merger: nothing left to merge");
    if (!mid_) {
        if (!active_) {
            cur_ = queue_.back();
            queue_.pop_back();
            active_ = true;
        }
        ++proposals_;
        return {merge_end_, cur_.red_s};
    }
    ++proposals_;
    return {merge_end_, cur_.red_t};
}

void Phase2Merger::observe(int u, int v, Color c) {
    (void)u;
    (void)v;
    if (!active_) throw StageViolationError("merger: observe without proposal");
    if (!mid_) {
        if (c == Color::Blue) {
            blue_len_ += cur_.s;
            merge_end_ = cur_.end_s;
            active_ = false;
        } else {
            mid_ = true;
        }
        return;
    }
    if (c == Color::Blue) {
        blue_len_ += cur_.t;
        merge_end_ = cur_.end_t;
    } else {
        red_triangle_ = true;  // w-x, w-y and x-y are all red
    }
    mid_ = false;
    active_ = false;
}

// ----------------------------------------------------------------- compute_k

int compute_k(int n, int m) {
    if (n < 3) throw InvalidTargetError("compute_k: n >= 3 required");
    const long long cap = static_cast<long long>(n - 1) * (n - 1) / 4;
    if (m < n || m > cap)
        throw InvalidTargetError("compute_k: need n <= m <= (n-1)^2/4");
    for (int k = 1; k <= n; ++k) {
        const long long lo = k / 2;
        const long long hi = (k + 1) / 2;
        const long long turan_blue = lo * (lo - 1) / 2 + hi * (hi - 1) / 2;
        if (m <= n - k + turan_blue) return k;
    }
    throw InvalidTargetError("compute_k: no k <= n satisfies the inequality");
}

long long theorem5_round_bound(int n, int m) {
    if (m == n - 1) return 3LL * n - 4;
    const long long k = compute_k(n, m);
    return 3LL * n + k * (k - 1) / 2 - k - 3;
}

// ------------------------------------------------------------ Theorem3Builder

Theorem3Builder::Theorem3Builder(int n, bool check_invariants)
    : n_(n), check_(check_invariants) {
    if (n < 3) throw InvalidTargetError("theorem3 builder: n >= 3 required");
    if (n == 3) {
        // The whole game is the 5-vertex subroutine.
        stage_ = Stage::K5;
        k5_verts_ = {0, 1, 2, 3, 4};
        k5_node_ = k5_blue_p3_tree().root;
        return;
    }
    pure_.reserve(2 * n - 1);
    for (int v = 0; v < 2 * n - 1; ++v) {
        PathRecord r;
        r.kind = PathRecord::Kind::PureBlue;
        r.s = 1;
        r.end_s = v;
        r.end_t = v;
        pure_.push_back(r);
    }
}

std::pair<int, int> Theorem3Builder::propose(const ColoredGraph& g) {
    switch (stage_) {
        case Stage::Stage1: {
            // The two shortest pure blue paths, ties by smallest endpoint.
            auto key = [](const PathRecord& r) {
                return std::tuple<int, int, int>(r.s, std::min(r.end_s, r.end_t),
                                                 std::max(r.end_s, r.end_t));
            };
            if (pure_.size() < 2)
                throw StageViolationError("stage 1 needs two pure blue paths");
            int a = 0;
            for (std::size_t i = 1; i < pure_.size(); ++i)
                if (key(pure_[i]) < key(pure_[a])) a = static_cast<int>(i);
            int b = -1;
            for (std::size_t i = 0; i < pure_.size(); ++i) {
                if (static_cast<int>(i) == a) continue;
                if (b < 0 || key(pure_[i]) < key(pure_[b])) b = static_cast<int>(i);
            }
            // Join an end of each, smallest labels first.
            std::pair<int, int> best{-1, -1};
            int bx = -1, by = -1;
            for (int x : {pure_[a].end_s, pure_[a].end_t})
                for (int y : {pure_[b].end_s, pure_[b].end_t}) {
                    auto cand = ordered(x, y);
                    if (bx < 0 || cand < best) {
                        best = cand;
                        bx = x;
                        by = y;
                    }
                }
            join_a_ = a;
            join_b_ = b;
            join_x_ = bx;
            join_y_ = by;
            (void)g;
            return {bx, by};
        }
        case Stage::K5: {
            const auto& tree = k5_blue_p3_tree();
            const auto& node = tree.nodes[k5_node_];
            if (node.leaf()) throw StageViolationError("k5 subroutine already finished");
            return {k5_verts_[node.u], k5_verts_[node.v]};
        }
        case Stage::Merge:
            return merger_.propose();
        case Stage::Done:
            break;
    }
    throw StageViolationError("theorem3 builder: game is already decided");
}

void Theorem3Builder::observe(const ColoredGraph& g, int u, int v, Color c) {
    ++round_;
    switch (stage_) {
        case Stage::Stage1: {
            if (c == Color::Blue) all_red_ = false;
            PathRecord& A = pure_[join_a_];
            PathRecord& B = pure_[join_b_];
            if (c == Color::Blue) {
                PathRecord merged;
                merged.kind = PathRecord::Kind::PureBlue;
                merged.s = A.s + B.s;
                merged.end_s = other_end(A, join_x_);
                merged.end_t = other_end(B, join_y_);
                const int lo = std::min(join_a_, join_b_);
                const int hi = std::max(join_a_, join_b_);
                pure_.erase(pure_.begin() + hi);
                pure_.erase(pure_.begin() + lo);
                pure_.push_back(merged);
            } else {
                PathRecord brb;
                brb.kind = PathRecord::Kind::Brb;
                const PathRecord& big = A.s >= B.s ? A : B;
                const PathRecord& small = A.s >= B.s ? B : A;
                const int big_join = A.s >= B.s ? join_x_ : join_y_;
                const int small_join = A.s >= B.s ? join_y_ : join_x_;
                brb.s = big.s;
                brb.t = small.s;
                brb.red_s = big_join;
                brb.red_t = small_join;
                brb.end_s = other_end(big, big_join);
                brb.end_t = other_end(small, small_join);
                brb.created = round_;
                const int lo = std::min(join_a_, join_b_);
                const int hi = std::max(join_a_, join_b_);
                pure_.erase(pure_.begin() + hi);
                pure_.erase(pure_.begin() + lo);
                brb_.push_back(brb);
            }
            join_a_ = join_b_ = join_x_ = join_y_ = -1;
            if (check_) check_stage1_round_invariants();
            stage1_transitions(g);
            break;
        }
        case Stage::K5: {
            const auto& tree = k5_blue_p3_tree();
            const auto& node = tree.nodes[k5_node_];
            (void)u;
            (void)v;
            k5_node_ = c == Color::Red ? node.on_red : node.on_blue;
            if (tree.nodes[k5_node_].leaf()) finish_k5(g);
            break;
        }
        case Stage::Merge: {
            merger_.observe(u, v, c);
            if (merger_.red_triangle_hit()) stage_ = Stage::Done;
            break;
        }
        case Stage::Done:
            break;
    }
}

void Theorem3Builder::stage1_transitions(const ColoredGraph& g) {
    if (all_red_ && round_ == n_ - 3) {
        // All-red prefix: 2n-1 - 2(n-3) = 5 untouched vertices remain.
        enter_k5(g);
        return;
    }
    if (pure_.size() <= 1) {
        if (check_) check_stage1_end_invariants();
        enter_merge_normal();
    }
}

void Theorem3Builder::enter_k5(const ColoredGraph& g) {
    stage_ = Stage::K5;
    k5_verts_ = g.fresh_vertices(5);
    if (check_) {
        for (int x : k5_verts_)
            if (x >= 2 * n_ - 1)
                throw InvariantViolation("k5 vertices fall outside the 2n-1 board");
    }
    k5_node_ = k5_blue_p3_tree().root;
}

void Theorem3Builder::finish_k5(const ColoredGraph& g) {
    const auto& tree = k5_blue_p3_tree();
    const auto& leaf = tree.nodes[k5_node_];
    if (leaf.winner == 'r') {
        stage_ = Stage::Done;  // red triangle ends the game globally
        return;
    }
    if (n_ == 3) {
        stage_ = Stage::Done;  // blue 3-path is the whole target
        return;
    }
    // Locate the blue 3-path just forced inside the subroutine board.
    int center = -1;
    for (int x : k5_verts_) {
        int deg = 0;
        for (const auto& [w, col] : g.neighbors(x))
            if (col == Color::Blue) ++deg;
        if (deg >= 2) {
            center = x;
            break;
        }
    }
    if (center < 0) throw InvariantViolation("k5 subroutine ended without a blue 3-path");
    std::vector<int> legs;
    for (const auto& [w, col] : g.neighbors(center))
        if (col == Color::Blue) legs.push_back(w);
    std::sort(legs.begin(), legs.end());

    PathRecord base;
    base.kind = PathRecord::Kind::PureBlue;
    base.s = 3;
    base.end_s = legs[0];
    base.end_t = legs[1];
    // Records: the n-3 isolated red edges, all balanced P(1,1).
    merger_ = Phase2Merger(base.s, base.end_s, brb_);
    stage_ = Stage::Merge;
}

void Theorem3Builder::enter_merge_normal() {
    // H0: the pure blue path if one exists, otherwise the last imbalanced
    // brb-path, otherwise (all records balanced) the last balanced one.
    std::vector<PathRecord> imbalanced;
    std::vector<PathRecord> balanced;
    for (const auto& r : brb_)
        (r.imbalance() > 0 ? imbalanced : balanced).push_back(r);

    PathRecord h0;
    bool h0_from_imbalanced = false;
    bool h0_from_balanced = false;
    if (!pure_.empty()) {
        h0 = pure_[0];
    } else if (!imbalanced.empty()) {
        h0 = imbalanced.back();
        h0_from_imbalanced = true;
    } else if (!balanced.empty()) {
        h0 = balanced.back();
        h0_from_balanced = true;
    } else {
        throw InvariantViolation("stage 1 ended with no records at all");
    }
    if (h0_from_imbalanced) imbalanced.pop_back();
    if (h0_from_balanced) balanced.pop_back();

    std::vector<PathRecord> order = imbalanced;
    order.insert(order.end(), balanced.begin(), balanced.end());
    const int base_end =
        h0.kind == PathRecord::Kind::PureBlue ? std::min(h0.end_s, h0.end_t) : h0.end_s;
    merger_ = Phase2Merger(h0.s, base_end, std::move(order));
    stage_ = Stage::Merge;
}

void Theorem3Builder::check_stage1_round_invariants() const {
    // Pure path sizes pair up within a factor of two.
    int mn = 1 << 30, mx = 0, not_pow2 = 0;
    for (const auto& r : pure_) {
        mn = std::min(mn, r.s);
        mx = std::max(mx, r.s);
        if (!is_power_of_two(r.s)) ++not_pow2;
    }
    if (!pure_.empty() && mx > 2 * mn)
        throw InvariantViolation("stage 1: pure path sizes " + std::to_string(mn) + "/" +
                                 std::to_string(mx) + " violate the factor-2 fact");
    if (not_pow2 > 1)
        throw InvariantViolation("stage 1: more than one pure path size is not a power of 2");
}

void Theorem3Builder::check_stage1_end_invariants() const {
    std::vector<const PathRecord*> imbalanced;
    for (const auto& r : brb_)
        if (r.imbalance() > 0) imbalanced.push_back(&r);
    // Imbalances at least double in creation order.
    for (std::size_t i = 1; i < imbalanced.size(); ++i)
        if (imbalanced[i]->imbalance() < 2 * imbalanced[i - 1]->imbalance())
            throw InvariantViolation("stage 1 end: brb imbalances fail the doubling chain");
    if (!pure_.empty()) {
        if (pure_.size() > 1) throw InvariantViolation("stage 1 end: several pure paths remain");
        if (pure_[0].s < 2)
            throw InvariantViolation("stage 1 end: an isolated vertex remains");
        if (!imbalanced.empty() && pure_[0].s < 2 * imbalanced.back()->imbalance())
            throw InvariantViolation("stage 1 end: pure path smaller than twice the last imbalance");
    }
    // Sum of the other imbalances is dominated by H0's.
    long long h0_u = 0;
    long long rest = 0;
    std::size_t skip = imbalanced.size();  // index of H0 inside `imbalanced`, if any
    if (!pure_.empty()) {
        h0_u = pure_[0].s;  // u = s for a pure path
    } else if (!imbalanced.empty()) {
        skip = imbalanced.size() - 1;
        h0_u = imbalanced.back()->imbalance();
    }
    for (std::size_t i = 0; i < imbalanced.size(); ++i)
        if (i != skip) rest += imbalanced[i]->imbalance();
    if (rest > h0_u)
        throw InvariantViolation("stage 1 end: imbalance sum exceeds H0's imbalance");
    // Component count (H0 plus m + l other records) and round count.
    const long long components = static_cast<long long>(brb_.size() + pure_.size());
    if (components > n_ - 1)
        throw InvariantViolation("stage 1 end: too many components");
    long long covered = 0;
    for (const auto& r : brb_) covered += r.vertices();
    for (const auto& r : pure_) covered += r.vertices();
    if (covered != 2LL * n_ - 1)
        throw InvariantViolation("stage 1 end: records do not cover the 2n-1 board");
    if (round_ != 2LL * n_ - 1 - components)
        throw InvariantViolation("stage 1 end: round count mismatch");
}

// ------------------------------------------------------------ Theorem5Builder

Theorem5Builder::Theorem5Builder(int n, int m, bool check_invariants)
    : n_(n), m_(m), t3_(n, check_invariants) {
    if (n < 3) throw InvalidTargetError("theorem5 builder: n >= 3 required");
    // m = n-1 needs no completion phase (a blue n-path already carries n-1
    // edges); larger m must fit the triangle-free counting range.
    if (m != n - 1) {
        const long long cap = static_cast<long long>(n - 1) * (n - 1) / 4;
        if (m < n || m > cap)
            throw InvalidTargetError("theorem5 builder: need m = n-1 or n <= m <= (n-1)^2/4");
        k_ = compute_k(n, m);
    }
}

long long Theorem5Builder::round_bound() const { return theorem5_round_bound(n_, m_); }

std::pair<int, int> Theorem5Builder::propose(const ColoredGraph& g) {
    if (phase_ == Phase::Growing) return t3_.propose(g);
    while (turan_next_ < turan_.size()) {
        const auto e = turan_[turan_next_++];
        if (!g.has_edge(e.first, e.second)) return e;
    }
    throw InvariantViolation("turan phase exhausted without reaching the target");
}

void Theorem5Builder::observe(const ColoredGraph& g, int u, int v, Color c) {
    if (phase_ == Phase::Growing) {
        t3_.observe(g, u, v, c);
        if (k_ > 0 && g.longest_blue_path() >= n_) enter_turan(g);
    }
}

void Theorem5Builder::enter_turan(const ColoredGraph& g) {
    // The blue component that just reached n vertices is a simple path;
    // walk it from its smaller-labelled endpoint.
    int start = -1;
    int best_size = 0;
    for (int x : g.touched_vertices()) {
        int deg = 0;
        for (const auto& [w, col] : g.neighbors(x))
            if (col == Color::Blue) ++deg;
        if (deg != 1) continue;
        const int size = g.component_size(g.component_root(x));
        (void)size;
        // Endpoint of some blue path; measure the blue run from here.
        int len = 1;
        int prev = -1, cur = x;
        while (true) {
            int next = -1;
            for (const auto& [w, col] : g.neighbors(cur))
                if (col == Color::Blue && w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        if (len >= n_ && (start < 0 || x < start)) {
            start = x;
            best_size = len;
        }
    }
    if (start < 0) throw InvariantViolation("turan phase: no blue path of n vertices found");
    (void)best_size;
    std::vector<int> seq{start};
    int prev = -1, cur = start;
    while (static_cast<int>(seq.size()) < n_) {
        int next = -1;
        for (const auto& [w, col] : g.neighbors(cur))
            if (col == Color::Blue && w != prev) next = w;
        if (next < 0) throw InvariantViolation("turan phase: blue path ended early");
        prev = cur;
        cur = next;
        seq.push_back(cur);
    }
    std::vector<int> core(seq.begin(), seq.begin() + k_);
    std::sort(core.begin(), core.end());
    turan_.clear();
    for (std::size_t i = 0; i < core.size(); ++i)
        for (std::size_t j = i + 1; j < core.size(); ++j)
            if (!g.has_edge(core[i], core[j])) turan_.emplace_back(core[i], core[j]);
    turan_next_ = 0;
    phase_ = Phase::Turan;
}

}  // namespace ramsey
