#pragma once

#include <vector>

#include "alphaspectra/graph.hpp"
#include "alphaspectra/families.hpp"

namespace alphaspectra {

/// Move the edges {vw : w in moved} onto u. Requires moved to be a nonempty
/// subset of N(v) \ (N(u) u {u}); the result is then simple by construction.
struct ShiftSpec {
    int v = 0;
    int u = 0;
    std::vector<int> moved;
};

/// G' = G - {vw : w in N} + {uw : w in N}. Validates the spec invariants and
/// that the result stays connected.
Graph shift_neighbors(const Graph& g, const ShiftSpec& spec);

/// The leaf swap turning G_{p,s,q}(u,v) into G_{p-1,s,q+1}(u,v): detach the
/// outer leaf of the u-path and append it to the v-path. Requires the
/// hypothesis p - q >= max(s+1, 2); the result is checked isomorphic to the
/// directly constructed target when the instance carries its core spec.
PendantPathGraph rebalance_pendent_paths(const PendantPathGraph& g);

/// Replace a pendent path of exactly p >= 4 vertices hanging from v by two
/// pendent paths of 2 and p-2 vertices at v. Requires d(v) >= 2 (the
/// remainder tree keeps at least two vertices; splitting at a leaf would
/// return an isomorphic tree). Preserves the matching number, which is
/// asserted internally.
Graph split_pendent_path(const Graph& tree, int v, int p);

struct SplitPoint {
    int anchor = 0;
    std::vector<int> path;  // outside-in, >= 4 vertices
};

/// All valid split instances of a tree: for each vertex v with d(v) >= 2 and
/// each direction whose outward walk through degree <= 2 vertices ends in a
/// leaf after p >= 4 steps, one SplitPoint (v, that path).
std::vector<SplitPoint> split_points(const Graph& tree);

}  // namespace alphaspectra
