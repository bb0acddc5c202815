#pragma once

#include <vector>

#include "alphaspectra/graph.hpp"

namespace alphaspectra {

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // vertex sets, each sorted
    std::vector<int> cut_vertices;         // sorted articulation points
};

/// Biconnected components of a connected graph via DFS low-links. Every edge
/// lies in exactly one block; a vertex is an articulation point iff it lies
/// in at least two blocks.
BlockDecomposition block_decomposition(const Graph& g);

int count_cut_vertices(const Graph& g);

struct MatchingResult {
    int size = 0;
    std::vector<Edge> edges;  // a maximum matching witness
};

/// Exact maximum matching (Edmonds blossom); handles odd cycles.
MatchingResult matching_number(const Graph& g);

/// Independent exhaustive oracle; requires m <= 24.
int matching_number_brute(const Graph& g);

struct PendentPath {
    int anchor = -1;            // first vertex of degree >= 3; -1 for a pure path graph
    std::vector<int> vertices;  // outside-in: leaf first
};

/// All maximal pendent paths (degree <= 2 vertices ending in a leaf),
/// reported outside-in. A pure path graph is reported as one path with the
/// sentinel anchor -1.
std::vector<PendentPath> pendent_paths(const Graph& g);

bool is_regular(const Graph& g);
int max_degree(const Graph& g);
int min_degree(const Graph& g);

}  // namespace alphaspectra
