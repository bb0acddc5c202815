#include "alphaspectra/transforms.hpp"

#include <algorithm>

#include "alphaspectra/structure.hpp"

namespace alphaspectra {

Graph shift_neighbors(const Graph& g, const ShiftSpec& spec) {
    if (!g.is_connected()) throw std::invalid_argument("shift_neighbors: disconnected graph");
    if (spec.u == spec.v) throw std::invalid_argument("shift_neighbors: u == v");
    if (spec.moved.empty()) throw std::invalid_argument("shift_neighbors: empty vertex set");
    for (int w : spec.moved) {
        if (w == spec.u) throw std::invalid_argument("shift_neighbors: u in moved set");
        if (!g.has_edge(spec.v, w))
            throw std::invalid_argument("shift_neighbors: moved vertex not adjacent to v");
        if (g.has_edge(spec.u, w))
            throw std::invalid_argument("shift_neighbors: moved vertex already adjacent to u");
    }
    Graph out = g;
    for (int w : spec.moved) out = out.without_edge(spec.v, w).with_edge(spec.u, w);
    if (!out.is_connected())
        throw std::invalid_argument("shift_neighbors: shift would disconnect the graph");
    return out;
}

PendantPathGraph rebalance_pendent_paths(const PendantPathGraph& g) {
    if (g.p - g.q < std::max(g.s + 1, 2))
        throw std::invalid_argument("rebalance_pendent_paths: hypothesis p - q >= max(s+1, 2) fails");

    int leaf = g.u_path.front();          // u_1
    int second = g.u_path[1];             // u_2; p >= 2 is implied by the hypothesis
    int target = g.q == 0 ? g.v : g.v_path.front();  // v itself or v_1

    PendantPathGraph out;
    out.graph = g.graph.without_edge(leaf, second).with_edge(leaf, target);
    out.u = g.u;
    out.v = g.v;
    out.s = g.s;
    out.p = g.p - 1;
    out.q = g.q + 1;
    out.w_path = g.w_path;
    out.u_path.assign(g.u_path.begin() + 1, g.u_path.end());
    out.v_path.reserve(g.q + 1);
    out.v_path.push_back(leaf);
    out.v_path.insert(out.v_path.end(), g.v_path.begin(), g.v_path.end());
    out.core_spec = g.core_spec;

    if (g.core_spec) {
        PendantPathGraph direct = make_gpsq(*g.core_spec, out.p, out.s, out.q);
        if (canonical_code(out.graph) != canonical_code(direct.graph))
            throw std::logic_error("rebalance_pendent_paths: result differs from direct construction");
    }
    return out;
}

namespace {

// Outward walk from v through its neighbor `first`: the pendent path hanging
// off v in that direction, or empty if the walk hits a branch vertex.
std::vector<int> outward_walk(const Graph& g, int v, int first) {
    std::vector<int> path;
    int prev = v, cur = first;
    while (true) {
        path.push_back(cur);
        if (g.degree(cur) == 1) break;
        if (g.degree(cur) > 2) return {};
        int next = -1;
        for (int w : g.neighbors(cur))
            if (w != prev) next = w;
        prev = cur;
        cur = next;
    }
    std::reverse(path.begin(), path.end());  // outside-in: leaf first
    return path;
}

void check_tree(const Graph& t) {
    if (t.m() != t.n() - 1 || !t.is_connected())
        throw std::invalid_argument("split_pendent_path: input is not a tree");
}

}  // namespace

Graph split_pendent_path(const Graph& tree, int v, int p) {
    check_tree(tree);
    if (p < 4) throw std::invalid_argument("split_pendent_path: p >= 4 required");
    if (tree.degree(v) < 2)
        throw std::invalid_argument("split_pendent_path: anchor degree >= 2 required "
                                    "(splitting at a leaf is the identity up to isomorphism)");
    std::vector<int> path;
    for (int first : tree.neighbors(v)) {
        auto walk = outward_walk(tree, v, first);
        if (static_cast<int>(walk.size()) == p) {
            path = walk;
            break;
        }
    }
    if (path.empty())
        throw std::invalid_argument("split_pendent_path: no pendent path of that length at v");

    int before = matching_number(tree).size;
    Graph out = tree.without_edge(path[1], path[2]).with_edge(path[1], v);
    if (matching_number(out).size != before)
        throw std::logic_error("split_pendent_path: matching number changed");
    return out;
}

std::vector<SplitPoint> split_points(const Graph& tree) {
    check_tree(tree);
    std::vector<SplitPoint> out;
    for (int v = 0; v < tree.n(); ++v) {
        if (tree.degree(v) < 2) continue;
        for (int first : tree.neighbors(v)) {
            auto walk = outward_walk(tree, v, first);
            if (walk.size() >= 4) out.push_back({v, std::move(walk)});
        }
    }
    return out;
}

}  // namespace alphaspectra
