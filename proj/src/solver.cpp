#include "ramsey/solver.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ramsey/errors.hpp"
#include "ramsey/painter.hpp"

namespace ramsey {

namespace {

// ------------------------------------------------------------ canonical form
//
// Per-component canonical labeling. Cells are refined by (red, blue) counts
// toward every cell until stable; non-discrete partitions branch on the
// first non-singleton cell, pruning candidates that discovered automorphisms
// (those fixing the individualized prefix pointwise) map onto already-tried
// ones. The certificate is the lexicographically smallest adjacency code
// over all discrete refinement-respecting labelings.

class ComponentCanon {
public:
    ComponentCanon(int n, const std::array<std::array<std::uint8_t, 16>, 16>& color)
        : n_(n), color_(color) {}

    std::string run() {
        std::vector<std::vector<int>> start(1);
        start[0].resize(n_);
        std::iota(start[0].begin(), start[0].end(), 0);
        explore(std::move(start));
        return best_code_;
    }

private:
    using Partition = std::vector<std::vector<int>>;

    Partition refine(Partition cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t ci = 0; ci < cells.size(); ++ci) {
                if (cells[ci].size() <= 1) continue;
                std::vector<std::pair<std::vector<int>, int>> sigs;
                sigs.reserve(cells[ci].size());
                for (int v : cells[ci]) {
                    std::vector<int> sig;
                    sig.reserve(cells.size() * 2);
                    for (const auto& cell : cells) {
                        int r = 0, b = 0;
                        for (int w : cell) {
                            if (color_[v][w] == 1) ++r;
                            else if (color_[v][w] == 2) ++b;
                        }
                        sig.push_back(r);
                        sig.push_back(b);
                    }
                    sigs.emplace_back(std::move(sig), v);
                }
                std::sort(sigs.begin(), sigs.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                if (sigs.front().first != sigs.back().first) {
                    Partition next;
                    next.reserve(cells.size() + 2);
                    for (std::size_t cj = 0; cj < ci; ++cj) next.push_back(std::move(cells[cj]));
                    std::vector<int> group{sigs[0].second};
                    for (std::size_t k = 1; k < sigs.size(); ++k) {
                        if (sigs[k].first != sigs[k - 1].first) {
                            next.push_back(std::move(group));
                            group.clear();
                        }
                        group.push_back(sigs[k].second);
                    }
                    next.push_back(std::move(group));
                    for (std::size_t cj = ci + 1; cj < cells.size(); ++cj)
                        next.push_back(std::move(cells[cj]));
                    cells = std::move(next);
                    changed = true;
                    break;
                }
            }
        }
        return cells;
    }

    std::string encode(const std::vector<int>& order) const {
        std::string code;
        code.reserve(2 + (n_ * (n_ - 1) / 2 + 3) / 4);
        code.push_back(static_cast<char>(n_));
        std::uint8_t acc = 0;
        int fill = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                acc = static_cast<std::uint8_t>((acc << 2) | color_[order[i]][order[j]]);
                if (++fill == 4) {
                    code.push_back(static_cast<char>(acc));
                    acc = 0;
                    fill = 0;
                }
            }
        if (fill) code.push_back(static_cast<char>(acc << (2 * (4 - fill))));
        return code;
    }

    void explore(Partition cells) {
        cells = refine(std::move(cells));
        std::size_t target = cells.size();
        for (std::size_t ci = 0; ci < cells.size(); ++ci)
            if (cells[ci].size() > 1) {
                target = ci;
                break;
            }
        if (target == cells.size()) {
            std::vector<int> order;
            order.reserve(n_);
            for (const auto& cell : cells) order.push_back(cell[0]);
            std::string code = encode(order);
            if (!have_best_ || code < best_code_) {
                best_code_ = std::move(code);
                best_order_ = std::move(order);
                have_best_ = true;
            } else if (code == best_code_) {
                std::vector<int> sigma(n_);
                bool identity = true;
                for (int i = 0; i < n_; ++i) {
                    sigma[best_order_[i]] = order[i];
                    if (best_order_[i] != order[i]) identity = false;
                }
                if (!identity) autos_.push_back(std::move(sigma));
            }
            return;
        }

        const std::vector<int> candidates = cells[target];
        std::vector<int> tried;
        for (int v : candidates) {
            if (in_tried_orbit(v, tried)) continue;
            tried.push_back(v);
            Partition next;
            next.reserve(cells.size() + 1);
            for (std::size_t cj = 0; cj < target; ++cj) next.push_back(cells[cj]);
            next.push_back({v});
            std::vector<int> rest;
            for (int w : candidates)
                if (w != v) rest.push_back(w);
            next.push_back(std::move(rest));
            for (std::size_t cj = target + 1; cj < cells.size(); ++cj) next.push_back(cells[cj]);
            prefix_.push_back(v);
            explore(std::move(next));
            prefix_.pop_back();
        }
    }

    bool in_tried_orbit(int v, const std::vector<int>& tried) {
        if (tried.empty() || autos_.empty()) return false;
        // Orbits under the discovered automorphisms that fix the prefix.
        std::vector<int> uf(n_);
        std::iota(uf.begin(), uf.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (const auto& sigma : autos_) {
            bool fixes = true;
            for (int p : prefix_)
                if (sigma[p] != p) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int x = 0; x < n_; ++x) {
                int a = find(x), b = find(sigma[x]);
                if (a != b) uf[a] = b;
            }
        }
        const int rv = find(v);
        for (int t : tried)
            if (find(t) == rv) return true;
        return false;
    }

    int n_;
    const std::array<std::array<std::uint8_t, 16>, 16>& color_;
    std::vector<std::vector<int>> autos_;
    std::vector<int> best_order_;
    std::string best_code_;
    bool have_best_ = false;
    std::vector<int> prefix_;
};

Color other_color(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }

}  // namespace

std::string canonical_form(const ColoredGraph& g) {
    if (g.touched_count() > 16)
        throw ResourceLimitError("canonical_form: more than 16 non-isolated vertices");
    const auto verts = g.touched_vertices();
    // Group vertices by component.
    std::unordered_map<int, std::vector<int>> comps;
    for (int v : verts) comps[g.component_root(v)].push_back(v);
    std::vector<std::string> codes;
    codes.reserve(comps.size());
    for (const auto& [root, members] : comps) {
        const int n = static_cast<int>(members.size());
        std::unordered_map<int, int> local;
        for (int i = 0; i < n; ++i) local[members[i]] = i;
        std::array<std::array<std::uint8_t, 16>, 16> color{};
        for (int i = 0; i < n; ++i)
            for (const auto& [w, c] : g.neighbors(members[i])) {
                const int j = local.at(w);
                color[i][j] = c == Color::Red ? 1 : 2;
            }
        codes.push_back(ComponentCanon(n, color).run());
    }
    std::sort(codes.begin(), codes.end());
    std::string out;
    out.push_back(static_cast<char>(codes.size()));
    for (const auto& c : codes) out += c;
    return out;
}

// -------------------------------------------------------------- StrategyTree

int StrategyTree::depth() const {
    if (root < 0) return 0;
    std::function<int(int)> go = [&](int idx) -> int {
        const Node& nd = nodes[idx];
        if (nd.leaf()) return 0;
        return 1 + std::max(go(nd.on_red), go(nd.on_blue));
    };
    return go(root);
}

namespace {

void emit_node(const StrategyTree& t, int idx, int indent, std::ostream& os, bool inline_pos) {
    const StrategyTree::Node& nd = t.nodes[idx];
    if (!inline_pos)
        for (int i = 0; i < indent; ++i) os.put(' ');
    if (nd.leaf()) {
        os << "WIN " << (nd.winner == 'r' ? "red" : "blue") << " round " << nd.round << "\n";
        return;
    }
    os << "edge " << nd.u << " " << nd.v << " ?\n";
    for (int i = 0; i < indent + 2; ++i) os.put(' ');
    os << "R -> ";
    emit_node(t, nd.on_red, indent + 2 + 5, os, true);
    for (int i = 0; i < indent + 2; ++i) os.put(' ');
    os << "B -> ";
    emit_node(t, nd.on_blue, indent + 2 + 5, os, true);
}

}  // namespace

void StrategyTree::write(std::ostream& os) const {
    if (root < 0) return;
    emit_node(*this, root, 0, os, false);
}

std::string StrategyTree::str() const {
    std::ostringstream ss;
    write(ss);
    return ss.str();
}

namespace {

bool replay_rec(const StrategyTree& t, int idx, ColoredGraph& g, const TargetSpec& target,
                int depth, int bound) {
    const StrategyTree::Node& nd = t.nodes[idx];
    const RefereeVerdict v = g.referee(target);
    if (nd.leaf()) {
        if (depth != nd.round || depth > bound) return false;
        return nd.winner == 'r' ? v.red_hit : v.blue_hit;
    }
    if (v.over()) return false;  // tree keeps playing past a finished game
    if (depth >= bound) return false;
    if (g.has_edge(nd.u, nd.v) || nd.u == nd.v) return false;
    for (Color c : {Color::Red, Color::Blue}) {
        ColoredGraph child = g;
        child.add_edge(nd.u, nd.v, c);
        const int next = c == Color::Red ? nd.on_red : nd.on_blue;
        if (!replay_rec(t, next, child, target, depth + 1, bound)) return false;
    }
    return true;
}

}  // namespace

bool replay_strategy_tree(const StrategyTree& tree, const TargetSpec& target, int bound) {
    if (tree.root < 0) return false;
    ColoredGraph g;
    return replay_rec(tree, tree.root, g, target, 0, bound);
}

// --------------------------------------------------------------------- Solver

Solver::Solver(TargetSpec target, SolveOptions opt) : target_(target), opt_(opt) {
    target_.validate();
    if (opt_.board != 0 && opt_.board < 2)
        throw PreconditionError("solver: restricted board needs >= 2 vertices");
    state_cap_ = opt_.state_cap;
    if (state_cap_ <= 0) {
        if (const char* env = std::getenv("RAMSEY_ARENA_STATE_CAP"))
            state_cap_ = std::atoll(env);
        if (state_cap_ <= 0) state_cap_ = 50000000;
    }
}

std::vector<std::pair<int, int>> Solver::gen_moves(const ColoredGraph& g) const {
    std::array<std::vector<std::pair<int, int>>, 4> cls;
    const auto touched = g.touched_vertices();
    for (std::size_t i = 0; i < touched.size(); ++i)
        for (std::size_t j = i + 1; j < touched.size(); ++j) {
            const int u = touched[i];
            const int v = touched[j];
            if (g.has_edge(u, v)) continue;
            const bool same = g.component_root(u) == g.component_root(v);
            cls[same ? 0 : 1].emplace_back(u, v);
        }
    std::vector<int> fresh;
    if (opt_.board > 0) {
        for (int x = 0; x < opt_.board && static_cast<int>(fresh.size()) < 2; ++x)
            if (!g.touched(x)) fresh.push_back(x);
    } else {
        fresh = g.fresh_vertices(2);
    }
    // Untouched vertices are interchangeable: one representative edge per
    // touched vertex, plus one fresh-fresh edge.
    if (!fresh.empty())
        for (int v : touched) cls[2].emplace_back(std::min(v, fresh[0]), std::max(v, fresh[0]));
    if (fresh.size() >= 2) cls[3].emplace_back(fresh[0], fresh[1]);
    std::vector<std::pair<int, int>> out;
    out.reserve(cls[0].size() + cls[1].size() + cls[2].size() + cls[3].size());
    for (auto& c : cls) out.insert(out.end(), c.begin(), c.end());
    return out;
}

std::string Solver::state_key(const ColoredGraph& g) {
    ++stats_.canon_calls;
    return canonical_form(g);
}

int Solver::search(const ColoredGraph& g, int rem) {
    if (g.referee(target_).over()) return 0;
    if (rem <= 0) return kNoWin;

    const bool can_memo = g.touched_count() <= 16;
    std::string key;
    if (can_memo) {
        key = state_key(g);
        auto it = table_.find(key);
        if (it != table_.end()) {
            ++stats_.tt_hits;
            if (it->second.resolved >= 0)
                return it->second.resolved <= rem ? it->second.resolved : kNoWin;
            if (it->second.lower > rem) return kNoWin;
        }
    }
    if (++stats_.expanded > state_cap_)
        throw ResourceLimitError("solver: state cap " + std::to_string(state_cap_) + " exceeded");

    int best = kNoWin;
    for (const auto& [u, v] : gen_moves(g)) {
        Color first = Color::Red;
        if (g.red_bipartite()) first = potential_choice(g, u, v);
        int worst = 0;
        bool cut = false;
        for (Color c : {first, other_color(first)}) {
            ColoredGraph child = g;
            child.add_edge(u, v, c);
            const int cv = search(child, rem - 1);
            if (cv == kNoWin) {
                worst = kNoWin;
                break;
            }
            worst = std::max(worst, cv);
            if (best != kNoWin && 1 + worst >= best) {
                cut = true;  // cannot improve on the incumbent
                break;
            }
        }
        if (worst == kNoWin || cut) continue;
        best = std::min(best, 1 + worst);
        if (best == 1) break;
    }

    if (can_memo) {
        auto it = table_.find(key);
        if (it == table_.end()) {
            if (static_cast<long long>(table_.size()) < opt_.table_cap)
                it = table_.emplace(std::move(key), Entry{}).first;
        }
        if (it != table_.end()) {
            if (best != kNoWin) {
                it->second.resolved = best;
                it->second.lower = best;
            } else {
                it->second.lower = std::max(it->second.lower, rem + 1);
            }
        }
    }
    return best;
}

SolveResult Solver::solve(int budget) {
    if (budget < 0) throw PreconditionError("solver: budget must be >= 0");
    SolveResult result;
    result.budget = budget;
    result.target = target_;
    result.board = opt_.board;

    int red_edges = 3;
    if (target_.red == TargetSpec::RedFamily::RedPath) red_edges = target_.red_n - 1;
    int blue_edges = 0;
    switch (target_.blue) {
        case TargetSpec::BlueFamily::Path: blue_edges = target_.n - 1; break;
        case TargetSpec::BlueFamily::Connected:
        case TargetSpec::BlueFamily::AuxiliaryG: blue_edges = target_.m; break;
    }
    const int floor = std::max(0, red_edges + blue_edges - 1);

    ColoredGraph root;
    for (int d = std::min(floor, budget); d <= budget; ++d) {
        const int r = search(root, d);
        if (r != kNoWin) {
            result.value = r;
            break;
        }
    }
    result.stats = stats_;
    return result;
}

int Solver::build_node(StrategyTree& tree, const ColoredGraph& g, int depth, int value) {
    const RefereeVerdict verdict = g.referee(target_);
    if (verdict.over()) {
        StrategyTree::Node leaf;
        leaf.winner = verdict.red_hit ? 'r' : 'b';
        leaf.round = depth;
        tree.nodes.push_back(leaf);
        return static_cast<int>(tree.nodes.size()) - 1;
    }
    if (value <= 0) throw InvariantViolation("extract: non-terminal state with value 0");
    for (const auto& [u, v] : gen_moves(g)) {
        ColoredGraph red_child = g;
        red_child.add_edge(u, v, Color::Red);
        const int vr = search(red_child, value - 1);
        if (vr == kNoWin) continue;
        ColoredGraph blue_child = g;
        blue_child.add_edge(u, v, Color::Blue);
        const int vb = search(blue_child, value - 1);
        if (vb == kNoWin) continue;
        // 1 + max(vr, vb) >= value always; equality picks the move.
        if (1 + std::max(vr, vb) > value) continue;
        StrategyTree::Node node;
        node.u = u;
        node.v = v;
        tree.nodes.push_back(node);
        const int idx = static_cast<int>(tree.nodes.size()) - 1;
        const int ri = build_node(tree, red_child, depth + 1, vr);
        const int bi = build_node(tree, blue_child, depth + 1, vb);
        tree.nodes[idx].on_red = ri;
        tree.nodes[idx].on_blue = bi;
        return idx;
    }
    throw InvariantViolation("extract: no move matches the solved value");
}

StrategyTree Solver::extract_strategy(const SolveResult& r) {
    if (!r.value) throw NotSolvedError("extract_strategy: result is above budget");
    StrategyTree tree;
    ColoredGraph root;
    tree.root = build_node(tree, root, 0, *r.value);
    if (!replay_strategy_tree(tree, target_, *r.value))
        throw InvariantViolation("extract_strategy: replay verification failed");
    return tree;
}

SolveResult solve(const TargetSpec& target, int budget, SolveOptions opt) {
    Solver s(target, opt);
    return s.solve(budget);
}

SolveResult solve_restricted(const TargetSpec& target, int budget, int board, SolveOptions opt) {
    opt.board = board;
    Solver s(target, opt);
    return s.solve(budget);
}

namespace {

bool exhaust_rec(ColoredGraph& g, BuilderStrategy& builder, const TargetSpec& target, int done,
                 int bound) {
    if (done >= bound) return false;
    const auto [u, v] = builder.propose(g);
    if (u == v || g.has_edge(u, v))
        throw StrategyError("exhaustive check: builder proposed an illegal edge");
    for (Color c : {Color::Red, Color::Blue}) {
        ColoredGraph child = g;
        child.add_edge(u, v, c);
        auto forked = builder.clone();
        forked->observe(child, u, v, c);
        if (child.referee(target).over()) continue;  // this line ended in time
        if (!exhaust_rec(child, *forked, target, done + 1, bound)) return false;
    }
    return true;
}

}  // namespace

bool exhaustive_painter_check(const BuilderStrategy& builder_proto, const TargetSpec& target,
                              int bound, std::function<ColoredGraph()> board_factory) {
    ColoredGraph g = board_factory ? board_factory() : ColoredGraph();
    if (g.referee(target).over()) return true;
    auto builder = builder_proto.clone();
    return exhaust_rec(g, *builder, target, 0, bound);
}

const StrategyTree& k5_blue_p3_tree() {
    static const StrategyTree tree = [] {
        SolveOptions opt;
        opt.board = 5;
        Solver s(TargetSpec::c3_vs_path(3), opt);
        const SolveResult r = s.solve(5);
        if (!r.value || *r.value > 5)
            throw InvariantViolation("k5 subroutine: restricted solve did not close in 5");
        return s.extract_strategy(r);
    }();
    return tree;
}

}  // namespace ramsey
