#pragma once

// Brute-force reference implementations for verification. Everything here
// works on plain edge lists and stays independent of the engine's
// incremental data structures.

#include <cstdint>
#include <optional>
#include <random>
#include <tuple>
#include <vector>

#include "ramsey/board.hpp"

namespace ramsey::oracles {

using EdgeList = std::vector<std::tuple<int, int, Color>>;

// All vertex labels appearing in the edges, ascending.
std::vector<int> vertices_of(const EdgeList& edges);

// Exists a 2-sided vertex assignment with every red edge crossing and no
// blue edge crossing (checked over all 2^V assignments).
bool brute_red_bipartite(const EdgeList& edges);

// Longest path (vertex count) in the subgraph of one color, by DFS over all
// simple paths. Returns at least 1.
int brute_longest_path(const EdgeList& edges, Color c);

// Max edge count over connected size-n vertex subsets of the blue subgraph,
// by full subset enumeration; nullopt when no blue component has n vertices.
std::optional<int> brute_best_connected_blue(const EdgeList& edges, int n);

// Color-preserving isomorphism after stripping isolated vertices, by
// permutation search with degree pruning (intended for <= 8 vertices).
bool brute_isomorphic(const EdgeList& a, const EdgeList& b);

// Random colored graph: up to max_v vertices (labels 0..max_v-1) and up to
// max_e edges, edge colors uniform.
EdgeList random_colored_graph(std::mt19937_64& rng, int max_v, int max_e);

ColoredGraph graph_from(const EdgeList& edges);

}  // namespace ramsey::oracles
