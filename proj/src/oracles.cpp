#include "ramsey/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace ramsey::oracles {

std::vector<int> vertices_of(const EdgeList& edges) {
    std::set<int> s;
    for (const auto& [u, v, c] : edges) {
        s.insert(u);
        s.insert(v);
    }
    return {s.begin(), s.end()};
}

bool brute_red_bipartite(const EdgeList& edges) {
    const auto verts = vertices_of(edges);
    const int n = static_cast<int>(verts.size());
    std::map<int, int> idx;
    for (int i = 0; i < n; ++i) idx[verts[i]] = i;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool ok = true;
        for (const auto& [u, v, c] : edges) {
            const bool cross = ((mask >> idx[u]) & 1) != ((mask >> idx[v]) & 1);
            if (c == Color::Red ? !cross : cross) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return n == 0;
}

int brute_longest_path(const EdgeList& edges, Color c) {
    const auto verts = vertices_of(edges);
    const int n = static_cast<int>(verts.size());
    std::map<int, int> idx;
    for (int i = 0; i < n; ++i) idx[verts[i]] = i;
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v, col] : edges)
        if (col == c) {
            adj[idx[u]].push_back(idx[v]);
            adj[idx[v]].push_back(idx[u]);
        }
    int best = 1;
    std::vector<std::uint8_t> used(n, 0);
    std::function<void(int, int)> dfs = [&](int at, int len) {
        best = std::max(best, len);
        for (int w : adj[at])
            if (!used[w]) {
                used[w] = 1;
                dfs(w, len + 1);
                used[w] = 0;
            }
    };
    for (int s = 0; s < n; ++s) {
        used[s] = 1;
        dfs(s, 1);
        used[s] = 0;
    }
    return best;
}

std::optional<int> brute_best_connected_blue(const EdgeList& edges, int n) {
    if (n == 1) return 0;
    const auto verts = vertices_of(edges);
    const int v = static_cast<int>(verts.size());
    if (v < n) return std::nullopt;
    std::map<int, int> idx;
    for (int i = 0; i < v; ++i) idx[verts[i]] = i;
    std::vector<std::vector<int>> adj(v);
    for (const auto& [a, b, col] : edges)
        if (col == Color::Blue) {
            adj[idx[a]].push_back(idx[b]);
            adj[idx[b]].push_back(idx[a]);
        }
    std::optional<int> best;
    for (std::uint32_t mask = 0; mask < (1u << v); ++mask) {
        if (std::popcount(mask) != n) continue;
        // connectivity inside the subset, blue edges only
        int start = std::countr_zero(mask);
        std::uint32_t seen = 1u << start;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int x = stack.back();
            stack.pop_back();
            for (int w : adj[x]) {
                const std::uint32_t bit = 1u << w;
                if ((mask & bit) && !(seen & bit)) {
                    seen |= bit;
                    stack.push_back(w);
                }
            }
        }
        if (seen != mask) continue;
        int inner = 0;
        for (const auto& [a, b, col] : edges)
            if (col == Color::Blue && ((mask >> idx[a]) & 1) && ((mask >> idx[b]) & 1)) ++inner;
        best = std::max(best.value_or(-1), inner);
    }
    return best;
}

bool brute_isomorphic(const EdgeList& a, const EdgeList& b) {
    const auto va = vertices_of(a);
    const auto vb = vertices_of(b);
    if (va.size() != vb.size() || a.size() != b.size()) return false;
    const int n = static_cast<int>(va.size());
    std::map<int, int> ia, ib;
    for (int i = 0; i < n; ++i) ia[va[i]] = i;
    for (int i = 0; i < n; ++i) ib[vb[i]] = i;
    std::vector<std::vector<std::uint8_t>> ma(n, std::vector<std::uint8_t>(n, 0)), mb = ma;
    auto fill = [](const EdgeList& e, std::map<int, int>& idx,
                   std::vector<std::vector<std::uint8_t>>& m) {
        for (const auto& [u, v, c] : e) {
            const std::uint8_t code = c == Color::Red ? 1 : 2;
            m[idx[u]][idx[v]] = code;
            m[idx[v]][idx[u]] = code;
        }
    };
    fill(a, ia, ma);
    fill(b, ib, mb);
    auto degrees = [n](const std::vector<std::vector<std::uint8_t>>& m) {
        std::vector<std::pair<int, int>> d(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (m[i][j] == 1) ++d[i].first;
                if (m[i][j] == 2) ++d[i].second;
            }
        return d;
    };
    auto da = degrees(ma);
    auto db = degrees(mb);
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            if (da[i] != db[perm[i]]) {
                ok = false;
                break;
            }
            for (int j = i + 1; j < n && ok; ++j)
                if (ma[i][j] != mb[perm[i]][perm[j]]) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

EdgeList random_colored_graph(std::mt19937_64& rng, int max_v, int max_e) {
    const int v = 2 + static_cast<int>(rng() % std::max(1, max_v - 1));
    const int e_target = static_cast<int>(rng() % (max_e + 1));
    EdgeList edges;
    std::set<std::pair<int, int>> seen;
    for (int t = 0; t < e_target * 3 && static_cast<int>(edges.size()) < e_target; ++t) {
        int a = static_cast<int>(rng() % v);
        int b = static_cast<int>(rng() % v);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second) continue;
        edges.emplace_back(a, b, (rng() & 1) ? Color::Red : Color::Blue);
    }
    return edges;
}

ColoredGraph graph_from(const EdgeList& edges) {
    ColoredGraph g;
    for (const auto& [u, v, c] : edges) g.add_edge(u, v, c);
    return g;
}

}  // namespace ramsey::oracles
