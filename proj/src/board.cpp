#include "ramsey/board.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <queue>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

}  // namespace

// ---------------------------------------------------------------- TargetSpec

TargetSpec TargetSpec::c3_vs_path(int n) {
    TargetSpec t;
    t.red = RedFamily::TriangleOnly;
    t.blue = BlueFamily::Path;
    t.n = n;
    t.m = n - 1;
    t.validate();
    return t;
}

TargetSpec TargetSpec::codd_vs_con(int n, int m) {
    TargetSpec t;
    t.red = RedFamily::AllOddCycles;
    t.blue = BlueFamily::Connected;
    t.n = n;
    t.m = m;
    t.validate();
    return t;
}

TargetSpec TargetSpec::codd_vs_aux(int n, int m) {
    TargetSpec t;
    t.red = RedFamily::AllOddCycles;
    t.blue = BlueFamily::AuxiliaryG;
    t.n = n;
    t.m = m;
    t.validate();
    return t;
}

TargetSpec TargetSpec::redpath_vs_path(int red_n, int n) {
    TargetSpec t;
    t.red = RedFamily::RedPath;
    t.blue = BlueFamily::Path;
    t.red_n = red_n;
    t.n = n;
    t.m = n - 1;
    t.validate();
    return t;
}

void TargetSpec::validate() const {
    if (n < 1) throw InvalidTargetError("target: n must be >= 1");
    if (blue == BlueFamily::Connected || blue == BlueFamily::AuxiliaryG) {
        const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
        if (m < n - 1 || m > max_edges)
            throw InvalidTargetError("target: need n-1 <= m <= n(n-1)/2");
    }
    if (red == RedFamily::RedPath && red_n < 2)
        throw InvalidTargetError("target: red path needs >= 2 vertices");
}

std::string TargetSpec::red_str() const {
    switch (red) {
        case RedFamily::TriangleOnly: return "c3";
        case RedFamily::AllOddCycles: return "codd";
        case RedFamily::RedPath: return "p" + std::to_string(red_n);
    }
    return "?";
}

std::string TargetSpec::blue_str() const {
    switch (blue) {
        case BlueFamily::Path: return "path:" + std::to_string(n);
        case BlueFamily::Connected:
            return "con:" + std::to_string(n) + ":" + std::to_string(m);
        case BlueFamily::AuxiliaryG:
            return "aux:" + std::to_string(n) + ":" + std::to_string(m);
    }
    return "?";
}

std::string TargetSpec::str() const { return red_str() + " vs " + blue_str(); }

// -------------------------------------------------------------- ColoredGraph

int ColoredGraph::intern(int label) {
    auto it = index_.find(label);
    if (it != index_.end()) return it->second;
    const int idx = static_cast<int>(labels_.size());
    index_.emplace(label, idx);
    labels_.push_back(label);
    adj_.emplace_back();
    red_deg_.push_back(0);
    blue_deg_.push_back(0);
    full_.push_back({idx, 0, 0});
    CompInfo info;
    info.verts[0] = 1;
    info.min_label = label;
    info.min_parity = 0;
    comp_.push_back(info);
    red_.push_back({idx, 0, 0});
    blue_.push_back({idx, 0, 1, 0, 0, true});
    blue_max_component_ = std::max(blue_max_component_, 1);
    return idx;
}

std::pair<int, std::uint8_t> ColoredGraph::find_full(int idx) const {
    std::uint8_t parity = 0;
    while (full_[idx].parent != idx) {
        parity ^= full_[idx].parity;
        idx = full_[idx].parent;
    }
    return {idx, parity};
}

std::pair<int, std::uint8_t> ColoredGraph::find_red(int idx) const {
    std::uint8_t parity = 0;
    while (red_[idx].parent != idx) {
        parity ^= red_[idx].parity;
        idx = red_[idx].parent;
    }
    return {idx, parity};
}

int ColoredGraph::find_blue(int idx) const {
    while (blue_[idx].parent != idx) idx = blue_[idx].parent;
    return idx;
}

void ColoredGraph::add_edge(int u, int v, Color c) {
    if (u < 0 || v < 0) throw PreconditionError("add_edge: vertices must be non-negative");
    if (u == v) throw LoopEdgeError("add_edge: loop at vertex " + std::to_string(u));
    const std::uint64_t key = edge_key(u, v);
    if (edge_map_.count(key))
        throw DuplicateEdgeError("add_edge: edge {" + std::to_string(u) + "," +
                                 std::to_string(v) + "} already present");

    const int iu = intern(u);
    const int iv = intern(v);
    edge_map_.emplace(key, c);
    edge_list_.emplace_back(std::min(u, v), std::max(u, v), c);
    adj_[iu].emplace_back(v, c);
    adj_[iv].emplace_back(u, c);
    if (c == Color::Red) {
        ++red_deg_[iu];
        ++red_deg_[iv];
    } else {
        ++blue_deg_[iu];
        ++blue_deg_[iv];
    }

    // Full parity union-find (red = 1, blue = 0) with per-component side
    // populations and inner-edge counts.
    const std::uint8_t p = c == Color::Red ? 1 : 0;
    auto [ru, pu] = find_full(iu);
    auto [rv, pv] = find_full(iv);
    if (ru == rv) {
        if ((pu ^ pv) != p) {
            if (!comp_[ru].broken) {
                comp_[ru].broken = true;
                ++broken_components_;
            }
        } else if (p == 0) {
            comp_[ru].inner[pu] += 1;  // blue edge inside the side of parity pu
        }
    } else {
        if (full_[ru].rank < full_[rv].rank) {
            std::swap(ru, rv);
            std::swap(pu, pv);
        }
        // rv becomes child of ru; parity chosen so parity(u) ^ parity(v) == p.
        const std::uint8_t link = static_cast<std::uint8_t>(pu ^ pv ^ p);
        full_[rv].parent = ru;
        full_[rv].parity = link;
        if (full_[ru].rank == full_[rv].rank) ++full_[ru].rank;
        CompInfo& a = comp_[ru];
        const CompInfo& b = comp_[rv];
        a.verts[0] += b.verts[0 ^ link];
        a.verts[1] += b.verts[1 ^ link];
        a.inner[0] += b.inner[0 ^ link];
        a.inner[1] += b.inner[1 ^ link];
        if (b.min_label < a.min_label) {
            a.min_label = b.min_label;
            a.min_parity = static_cast<std::uint8_t>(b.min_parity ^ link);
        }
        if (b.broken) {
            if (a.broken) --broken_components_;  // two broken merge into one
            a.broken = true;
        }
        if (!a.broken) {
            if (p == 0) a.inner[pu] += 1;
        }
    }

    if (c == Color::Red) {
        // Red-only union-find: a red odd cycle is a parity contradiction.
        auto [rru, rpu] = find_red(iu);
        auto [rrv, rpv] = find_red(iv);
        if (rru == rrv) {
            if ((rpu ^ rpv) != 1) red_odd_cycle_ = true;
        } else {
            if (red_[rru].rank < red_[rrv].rank) {
                std::swap(rru, rrv);
                std::swap(rpu, rpv);
            }
            red_[rrv].parent = rru;
            red_[rrv].parity = static_cast<std::uint8_t>(rpu ^ rpv ^ 1);
            if (red_[rru].rank == red_[rrv].rank) ++red_[rru].rank;
        }
        // Triangle check: common red neighbor of u and v.
        if (!red_triangle_) {
            const int scan = red_deg_[iu] <= red_deg_[iv] ? iu : iv;
            const int other_label = scan == iu ? v : u;
            for (const auto& [w, wc] : adj_[scan]) {
                if (wc != Color::Red || w == u || w == v) continue;
                auto it = edge_map_.find(edge_key(w, other_label));
                if (it != edge_map_.end() && it->second == Color::Red) {
                    red_triangle_ = true;
                    break;
                }
            }
        }
    } else {
        // Blue union-find: sizes, edge counts, path shape.
        int bu = find_blue(iu);
        int bv = find_blue(iv);
        const int du = blue_deg_[iu];
        const int dv = blue_deg_[iv];
        if (bu == bv) {
            BlueNode& n = blue_[bu];
            n.edges += 1;
            n.max_deg = std::max({n.max_deg, du, dv});
            if (n.is_path) {  // closing a cycle (or worse)
                n.is_path = false;
                ++blue_nonpath_components_;
            }
        } else {
            if (blue_[bu].rank < blue_[bv].rank) std::swap(bu, bv);
            const bool was_path_u = blue_[bu].is_path;
            const bool was_path_v = blue_[bv].is_path;
            blue_[bv].parent = bu;
            if (blue_[bu].rank == blue_[bv].rank) ++blue_[bu].rank;
            BlueNode& n = blue_[bu];
            n.size += blue_[bv].size;
            n.edges += blue_[bv].edges + 1;
            n.max_deg = std::max({n.max_deg, blue_[bv].max_deg, du, dv});
            const bool now_path = n.edges == n.size - 1 && n.max_deg <= 2;
            n.is_path = now_path;
            const int before = (was_path_u ? 0 : 1) + (was_path_v ? 0 : 1);
            const int after = now_path ? 0 : 1;
            blue_nonpath_components_ += after - before;
            blue_max_component_ = std::max(blue_max_component_, n.size);
        }
    }
}

bool ColoredGraph::has_edge(int u, int v) const { return edge_map_.count(edge_key(u, v)) != 0; }

std::optional<Color> ColoredGraph::edge_color(int u, int v) const {
    auto it = edge_map_.find(edge_key(u, v));
    if (it == edge_map_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> ColoredGraph::touched_vertices() const {
    std::vector<int> out = labels_;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> ColoredGraph::fresh_vertices(int count) const {
    std::vector<int> out;
    out.reserve(count);
    for (int label = 0; static_cast<int>(out.size()) < count; ++label)
        if (!index_.count(label)) out.push_back(label);
    return out;
}

std::vector<std::tuple<int, int, Color>> ColoredGraph::edges() const {
    auto out = edge_list_;
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
    });
    return out;
}

const std::vector<std::pair<int, Color>>& ColoredGraph::neighbors(int v) const {
    auto it = index_.find(v);
    if (it == index_.end()) {
        static const std::vector<std::pair<int, Color>> kEmpty;
        return kEmpty;
    }
    return adj_[it->second];
}

int ColoredGraph::red_degree(int v) const {
    auto it = index_.find(v);
    return it == index_.end() ? 0 : red_deg_[it->second];
}

int ColoredGraph::blue_degree(int v) const {
    auto it = index_.find(v);
    return it == index_.end() ? 0 : blue_deg_[it->second];
}

int ColoredGraph::component_root(int v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw PreconditionError("component_root: vertex untouched");
    return labels_[find_full(it->second).first];
}

std::vector<int> ColoredGraph::component_roots() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i)
        if (full_[i].parent == i) out.push_back(labels_[i]);
    std::sort(out.begin(), out.end());
    return out;
}

int ColoredGraph::component_size(int root) const {
    auto it = index_.find(root);
    if (it == index_.end()) throw PreconditionError("component_size: unknown root");
    const int r = find_full(it->second).first;
    return static_cast<int>(comp_[r].verts[0] + comp_[r].verts[1]);
}

bool ColoredGraph::component_red_bipartite(int root) const {
    auto it = index_.find(root);
    if (it == index_.end()) throw PreconditionError("component_red_bipartite: unknown root");
    return !comp_[find_full(it->second).first].broken;
}

ColoredGraph::SideStats ColoredGraph::side_stats(int root) const {
    auto it = index_.find(root);
    if (it == index_.end()) throw PreconditionError("side_stats: unknown root");
    const int r = find_full(it->second).first;
    const CompInfo& info = comp_[r];
    if (info.broken) throw NotRedBipartiteError("side_stats: component has odd red parity cycle");
    SideStats s;
    // Side 1 = side of the smallest label.
    const std::uint8_t one = info.min_parity;
    s.v1 = info.verts[one];
    s.e1 = info.inner[one];
    s.v2 = info.verts[one ^ 1];
    s.e2 = info.inner[one ^ 1];
    return s;
}

int ColoredGraph::side_of(int v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw PreconditionError("side_of: vertex untouched");
    auto [r, parity] = find_full(it->second);
    if (comp_[r].broken) throw NotRedBipartiteError("side_of: component has odd red parity cycle");
    return parity == comp_[r].min_parity ? 0 : 1;
}

std::pair<std::vector<int>, std::vector<int>> ColoredGraph::red_bipartition(int root) const {
    auto it = index_.find(root);
    if (it == index_.end()) throw PreconditionError("red_bipartition: unknown root");
    const int r = find_full(it->second).first;
    if (comp_[r].broken)
        throw NotRedBipartiteError("red_bipartition: component has odd red parity cycle");
    std::pair<std::vector<int>, std::vector<int>> out;
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        auto [ri, pi] = find_full(i);
        if (ri != r) continue;
        if (pi == comp_[r].min_parity)
            out.first.push_back(labels_[i]);
        else
            out.second.push_back(labels_[i]);
    }
    std::sort(out.first.begin(), out.first.end());
    std::sort(out.second.begin(), out.second.end());
    return out;
}

// Exact longest path inside one component of a single-color subgraph.
// `comp` holds dense ids local to `adj` (which is indexed by dense id and
// lists dense ids). Components up to limits_.bitmask_dp_max vertices run the
// subset DP; larger ones run exact branch-and-bound with a reachability
// bound. Degree <= 2 components are read off directly.
int ColoredGraph::exact_longest_path_component(const std::vector<int>& comp,
                                               const std::vector<std::vector<int>>& adj) const {
    const int s = static_cast<int>(comp.size());
    if (s > limits_.component_cap)
        throw ResourceLimitError("longest_path: component of " + std::to_string(s) +
                                 " vertices exceeds cap " + std::to_string(limits_.component_cap));
    int max_deg = 0;
    long long edge_count = 0;
    for (int v : comp) {
        max_deg = std::max(max_deg, static_cast<int>(adj[v].size()));
        edge_count += static_cast<long long>(adj[v].size());
    }
    edge_count /= 2;
    if (max_deg <= 2) {
        // A path visits everything; a cycle also has a Hamiltonian path.
        return s;
    }

    std::unordered_map<int, int> local;
    local.reserve(comp.size());
    for (int i = 0; i < s; ++i) local[comp[i]] = i;

    if (s <= limits_.bitmask_dp_max && s <= 24) {
        std::vector<std::uint32_t> nbr(s, 0);
        for (int i = 0; i < s; ++i)
            for (int w : adj[comp[i]]) nbr[i] |= 1u << local[w];
        // ends[mask] = set of vertices a path covering exactly `mask` can end at
        std::vector<std::uint32_t> ends(std::size_t{1} << s, 0);
        for (int i = 0; i < s; ++i) ends[std::size_t{1} << i] = 1u << i;
        int best = 1;
        for (std::uint32_t mask = 1; mask < (1u << s); ++mask) {
            std::uint32_t e = ends[mask];
            if (!e) continue;
            best = std::max(best, std::popcount(mask));
            while (e) {
                const int last = std::countr_zero(e);
                e &= e - 1;
                std::uint32_t ext = nbr[last] & ~mask;
                while (ext) {
                    const int nxt = std::countr_zero(ext);
                    ext &= ext - 1;
                    ends[mask | (1u << nxt)] |= 1u << nxt;
                }
            }
        }
        return best;
    }

    // Branch and bound: DFS over simple paths; bound by vertices still
    // reachable from the current endpoint.
    std::vector<std::uint8_t> used(s, 0);
    int best = 1;
    std::vector<int> stack;
    auto reachable_bound = [&](int from, int used_count) {
        std::vector<std::uint8_t> seen(s, 0);
        std::queue<int> q;
        q.push(from);
        seen[from] = 1;
        int cnt = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            ++cnt;
            for (int w : adj[comp[x]]) {
                int lw = local[w];
                if (!used[lw] && !seen[lw]) {
                    seen[lw] = 1;
                    q.push(lw);
                }
            }
        }
        return used_count + cnt - 1;  // `from` counted in both
    };
    std::function<void(int, int)> dfs = [&](int at, int len) {
        best = std::max(best, len);
        if (best == s) return;
        if (reachable_bound(at, len) <= best) return;
        for (int w : adj[comp[at]]) {
            int lw = local[w];
            if (used[lw]) continue;
            used[lw] = 1;
            dfs(lw, len + 1);
            used[lw] = 0;
            if (best == s) return;
        }
    };
    for (int i = 0; i < s && best < s; ++i) {
        used[i] = 1;
        dfs(i, 1);
        used[i] = 0;
    }
    return best;
}

std::vector<std::vector<int>> ColoredGraph::color_adjacency(Color c) const {
    std::vector<std::vector<int>> adj(labels_.size());
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i)
        for (const auto& [w, wc] : adj_[i])
            if (wc == c) adj[i].push_back(index_.at(w));
    return adj;
}

int ColoredGraph::longest_blue_path() const {
    if (blue_max_component_ > limits_.component_cap)
        throw ResourceLimitError("longest_blue_path: blue component of " +
                                 std::to_string(blue_max_component_) + " vertices exceeds cap " +
                                 std::to_string(limits_.component_cap));
    if (blue_nonpath_components_ == 0) {
        // Every blue component is a simple path.
        return std::max(1, blue_max_component_);
    }
    const auto adj = color_adjacency(Color::Blue);
    int best = 1;
    for (int r = 0; r < static_cast<int>(labels_.size()); ++r) {
        if (find_blue(r) != r || blue_[r].size <= best) continue;
        if (blue_[r].is_path) {
            best = std::max(best, blue_[r].size);
            continue;
        }
        std::vector<int> comp;
        comp.reserve(blue_[r].size);
        for (int j = 0; j < static_cast<int>(labels_.size()); ++j)
            if (find_blue(j) == r) comp.push_back(j);
        best = std::max(best, exact_longest_path_component(comp, adj));
    }
    return best;
}

int ColoredGraph::longest_red_path() const {
    const auto adj = color_adjacency(Color::Red);
    std::vector<std::uint8_t> seen(labels_.size(), 0);
    int best = 1;
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        if (seen[i] || adj[i].empty()) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(i);
        seen[i] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            comp.push_back(x);
            for (int w : adj[x])
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        best = std::max(best, exact_longest_path_component(comp, adj));
    }
    return best;
}

std::optional<int> ColoredGraph::best_connected_blue_subgraph(int n,
                                                              std::optional<int> stop_at) const {
    if (n < 1) throw PreconditionError("best_connected_blue_subgraph: n >= 1 required");
    if (n == 1) return 0;  // a single vertex of the infinite board
    // Candidate components: blue components with >= n vertices.
    std::vector<int> roots;
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i)
        if (find_blue(i) == i && blue_[i].size >= n) roots.push_back(i);
    if (roots.empty()) return std::nullopt;

    const auto adj = color_adjacency(Color::Blue);
    long long budget = limits_.subset_cap;
    int best = -1;
    for (int r : roots) {
        if (blue_[r].size > limits_.component_cap)
            throw ResourceLimitError("best_connected_blue_subgraph: component exceeds cap");
        std::vector<int> comp;
        for (int j = 0; j < static_cast<int>(labels_.size()); ++j)
            if (find_blue(j) == r) comp.push_back(j);
        const int s = static_cast<int>(comp.size());
        if (s > 64)
            throw ResourceLimitError("best_connected_blue_subgraph: component exceeds 64 vertices");
        std::vector<std::uint64_t> nbr(s, 0);
        std::unordered_map<int, int> local;
        for (int i = 0; i < s; ++i) local[comp[i]] = i;
        int comp_max_deg = 0;
        for (int i = 0; i < s; ++i) {
            for (int w : adj[comp[i]]) nbr[i] |= std::uint64_t{1} << local[w];
            comp_max_deg = std::max(comp_max_deg, static_cast<int>(adj[comp[i]].size()));
        }
        // Quick exact answer for simple paths: n consecutive vertices.
        if (blue_[r].is_path) {
            best = std::max(best, n - 1);
            if (stop_at && best >= *stop_at) return best;
            continue;
        }

        // Enumerate connected vertex sets of size exactly n: binary
        // branching on the lowest candidate (include / exclude forever).
        std::function<void(std::uint64_t, std::uint64_t, std::uint64_t, int, int)> grow =
            [&](std::uint64_t set, std::uint64_t cand, std::uint64_t banned, int size, int inner) {
                if (stop_at && best >= *stop_at) return;
                if (size == n) {
                    best = std::max(best, inner);
                    return;
                }
                if (--budget < 0)
                    throw ResourceLimitError("best_connected_blue_subgraph: search cap");
                const int r_more = n - size;
                const int ub = inner + r_more * (r_more - 1) / 2 +
                               r_more * std::min(size, comp_max_deg);
                if (ub <= best) return;
                if (cand == 0) return;
                const int u = std::countr_zero(cand);
                const std::uint64_t ubit = std::uint64_t{1} << u;
                // include u
                grow(set | ubit, (cand | nbr[u]) & ~(set | ubit) & ~banned, banned, size + 1,
                     inner + std::popcount(nbr[u] & set));
                // exclude u for good
                grow(set, cand & ~ubit, banned | ubit, size, inner);
            };
        for (int i = 0; i + n <= s + 0 && i < s; ++i) {
            const std::uint64_t ibit = std::uint64_t{1} << i;
            const std::uint64_t banned = ibit - 1;  // only sets whose minimum is i
            grow(ibit, nbr[i] & ~banned, banned, 1, 0);
            if (stop_at && best >= *stop_at) break;
        }
        if (stop_at && best >= *stop_at) return best;
    }
    return best >= 0 ? std::optional<int>(best) : std::nullopt;
}

bool ColoredGraph::aux_target_reached(int n, int m) const {
    if (broken_components_ > 0) return true;  // odd red parity cycle exists
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
        if (full_[i].parent != i) continue;
        const CompInfo& info = comp_[i];
        if ((info.verts[0] >= n && info.inner[0] >= m) ||
            (info.verts[1] >= n && info.inner[1] >= m))
            return true;
    }
    return false;
}

RefereeVerdict ColoredGraph::referee(const TargetSpec& t) const {
    RefereeVerdict v;
    switch (t.red) {
        case TargetSpec::RedFamily::TriangleOnly: v.red_hit = red_triangle_; break;
        case TargetSpec::RedFamily::AllOddCycles: v.red_hit = red_odd_cycle_; break;
        case TargetSpec::RedFamily::RedPath: v.red_hit = longest_red_path() >= t.red_n; break;
    }
    switch (t.blue) {
        case TargetSpec::BlueFamily::Path: v.blue_hit = longest_blue_path() >= t.n; break;
        case TargetSpec::BlueFamily::Connected: {
            auto b = best_connected_blue_subgraph(t.n, t.m);
            v.blue_hit = b.has_value() && *b >= t.m;
            break;
        }
        case TargetSpec::BlueFamily::AuxiliaryG: v.blue_hit = aux_target_reached(t.n, t.m); break;
    }
    return v;
}

bool ColoredGraph::operator==(const ColoredGraph& o) const {
    if (edge_list_.size() != o.edge_list_.size()) return false;
    return edges() == o.edges();
}

}  // namespace ramsey
