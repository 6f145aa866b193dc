#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ramsey {

enum class Color : std::uint8_t { Red, Blue };

inline char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

// What the game is played for. The red side is a family of red targets
// (a red triangle, any red odd cycle, or a red path for cross-checks); the
// blue side is a path, a connected graph with an edge quota, or the
// auxiliary side/inner-edge condition.
struct TargetSpec {
    enum class RedFamily { TriangleOnly, AllOddCycles, RedPath };
    enum class BlueFamily { Path, Connected, AuxiliaryG };

    RedFamily red = RedFamily::TriangleOnly;
    BlueFamily blue = BlueFamily::Path;
    int n = 3;       // blue family size parameter
    int m = 2;       // blue edge quota (Connected / AuxiliaryG)
    int red_n = 3;   // path length for RedFamily::RedPath

    static TargetSpec c3_vs_path(int n);
    static TargetSpec codd_vs_con(int n, int m);
    static TargetSpec codd_vs_aux(int n, int m);
    static TargetSpec redpath_vs_path(int red_n, int n);

    // Throws InvalidTargetError when parameters are out of range.
    void validate() const;

    std::string red_str() const;
    std::string blue_str() const;
    std::string str() const;
};

struct RefereeVerdict {
    bool red_hit = false;
    bool blue_hit = false;
    bool over() const { return red_hit || blue_hit; }
};

// The authoritative game state: a finite colored graph living inside the
// unbounded vertex pool 0,1,2,... A vertex exists (is "touched") once it
// appears in an edge; everything else is an isolated vertex of the infinite
// board. Red-bipartiteness is tracked incrementally with a parity
// union-find (red edge = parity 1, blue edge = parity 0): the graph is
// red-bipartite iff no component carries a parity contradiction, and each
// red-bipartite component splits into two sides with no blue edge across
// and no red edge inside.
class ColoredGraph {
public:
    struct Limits {
        int bitmask_dp_max = 24;        // exact DP below this component size
        int component_cap = 40;         // hard per-component vertex cap
        long long subset_cap = 5000000; // connected-subset enumeration cap
    };

    ColoredGraph() = default;
    explicit ColoredGraph(Limits limits) : limits_(limits) {}

    const Limits& limits() const { return limits_; }
    void set_limits(Limits limits) { limits_ = limits; }

    // --- mutation ---------------------------------------------------------

    // Adds {u,v} with color c. Throws LoopEdgeError / DuplicateEdgeError.
    void add_edge(int u, int v, Color c);

    // --- basic queries ----------------------------------------------------

    bool touched(int v) const { return index_.count(v) != 0; }
    int touched_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edge_list_.size()); }
    bool has_edge(int u, int v) const;
    std::optional<Color> edge_color(int u, int v) const;

    std::vector<int> touched_vertices() const;  // ascending labels
    // The `count` smallest untouched labels.
    std::vector<int> fresh_vertices(int count) const;
    // Edges as (u, v, color) with u < v, sorted.
    std::vector<std::tuple<int, int, Color>> edges() const;

    // Neighbors of a touched vertex as (label, color) pairs, insertion order.
    const std::vector<std::pair<int, Color>>& neighbors(int v) const;
    int red_degree(int v) const;
    int blue_degree(int v) const;

    // --- red-bipartition structure -----------------------------------------

    bool red_bipartite() const { return broken_components_ == 0; }
    bool has_red_odd_cycle() const { return red_odd_cycle_; }
    bool has_red_triangle() const { return red_triangle_; }

    // Representative label of v's component (v must be touched).
    int component_root(int v) const;
    // Roots of all components, ascending by label.
    std::vector<int> component_roots() const;
    int component_size(int root) const;
    bool component_red_bipartite(int root) const;

    // Side populations of a red-bipartite component. Side 1 is the side
    // containing the smallest label of the component. Vertex counts and
    // inner edge counts (edges with both ends in the side; necessarily blue).
    struct SideStats {
        std::int64_t v1 = 0, e1 = 0;
        std::int64_t v2 = 0, e2 = 0;
    };
    SideStats side_stats(int root) const;  // throws NotRedBipartiteError

    // 0 if v lies on the side of the smallest label, 1 otherwise.
    int side_of(int v) const;

    // Explicit vertex lists of the two sides, each ascending; first side
    // contains the smallest label. Throws NotRedBipartiteError.
    std::pair<std::vector<int>, std::vector<int>> red_bipartition(int root) const;

    // --- referee predicates -------------------------------------------------

    // Vertex count of the longest path using blue edges only; >= 1 because
    // the infinite board always has a vertex. Exact. Throws
    // ResourceLimitError when a blue component exceeds the configured cap.
    int longest_blue_path() const;
    int longest_red_path() const;

    // Max blue edge count over connected blue subgraphs on exactly n
    // vertices; nullopt when no blue component reaches n vertices.
    // `stop_at` allows early exit once a value >= stop_at is witnessed (the
    // result is then only guaranteed to be >= stop_at).
    std::optional<int> best_connected_blue_subgraph(int n,
                                                    std::optional<int> stop_at = std::nullopt) const;

    // Auxiliary end condition: a parity-contradicted cycle exists, or some
    // red-bipartite component has a side with >= n vertices and >= m inner
    // edges.
    bool aux_target_reached(int n, int m) const;

    RefereeVerdict referee(const TargetSpec& t) const;

    // Positions are equal when they carry the same colored edge set
    // (vertex labels literal).
    bool operator==(const ColoredGraph& o) const;

private:
    struct FullNode {          // parity union-find over all edges
        int parent;
        int rank;
        std::uint8_t parity;   // parity of path to parent
    };
    struct CompInfo {          // valid at roots of the full union-find
        bool broken = false;   // parity contradiction seen
        std::int64_t verts[2] = {0, 0};
        std::int64_t inner[2] = {0, 0};  // blue edges inside each side
        int min_label = 0;
        std::uint8_t min_parity = 0;     // parity of min_label vertex
    };
    struct RedNode {           // union-find over red edges only, parity 1
        int parent;
        int rank;
        std::uint8_t parity;
    };
    struct BlueNode {          // union-find over blue edges only
        int parent;
        int rank;
        int size;              // vertex count (valid at root)
        int edges;             // blue edge count (valid at root)
        int max_deg;           // max blue degree in component (valid at root)
        bool is_path;          // acyclic and max_deg <= 2 (valid at root)
    };

    int intern(int label);
    std::pair<int, std::uint8_t> find_full(int idx) const;
    std::pair<int, std::uint8_t> find_red(int idx) const;
    int find_blue(int idx) const;

    int exact_longest_path_component(const std::vector<int>& comp,
                                     const std::vector<std::vector<int>>& adj) const;
    std::vector<std::vector<int>> color_adjacency(Color c) const;

    Limits limits_;
    std::unordered_map<int, int> index_;          // label -> dense index
    std::vector<int> labels_;                     // dense index -> label
    std::vector<std::vector<std::pair<int, Color>>> adj_;  // by dense index, labels stored
    std::vector<int> red_deg_, blue_deg_;
    std::unordered_map<std::uint64_t, Color> edge_map_;    // key(min,max) -> color
    std::vector<std::tuple<int, int, Color>> edge_list_;   // insertion order, u < v

    std::vector<FullNode> full_;
    std::vector<CompInfo> comp_;
    std::vector<RedNode> red_;
    std::vector<BlueNode> blue_;

    int broken_components_ = 0;
    bool red_odd_cycle_ = false;
    bool red_triangle_ = false;
    int blue_nonpath_components_ = 0;
    int blue_max_component_ = 0;
};

}  // namespace ramsey
