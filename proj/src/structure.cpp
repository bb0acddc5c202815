#include "alphaspectra/structure.hpp"

#include <algorithm>
#include <set>

namespace alphaspectra {

namespace {

struct BccState {
    const Graph& g;
    int timer = 0;
    std::vector<int> disc, low;
    std::vector<Edge> stack;
    std::vector<std::vector<int>> blocks;
    std::set<int> cuts;

    explicit BccState(const Graph& g) : g(g), disc(g.n(), 0), low(g.n(), 0) {}

    void pop_block(const Edge& until) {
        std::set<int> verts;
        while (true) {
            Edge e = stack.back();
            stack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            if (e == until) break;
        }
        blocks.emplace_back(verts.begin(), verts.end());
    }

    void dfs(int u, int parent) {
        disc[u] = low[u] = ++timer;
        int children = 0;
        for (int v : g.neighbors(u)) {
            if (v == parent) continue;
            if (!disc[v]) {
                ++children;
                stack.push_back({u, v});
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent != -1 || children > 1) cuts.insert(u);
                    pop_block({u, v});
                }
            } else if (disc[v] < disc[u]) {
                stack.push_back({u, v});
                low[u] = std::min(low[u], disc[v]);
            }
        }
    }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    if (!g.is_connected()) throw std::invalid_argument("block_decomposition: disconnected graph");
    BlockDecomposition out;
    if (g.n() == 1) {
        out.blocks = {{0}};
        return out;
    }
    BccState state(g);
    state.dfs(0, -1);
    out.blocks = std::move(state.blocks);
    for (auto& b : out.blocks) std::sort(b.begin(), b.end());
    std::sort(out.blocks.begin(), out.blocks.end());
    out.cut_vertices.assign(state.cuts.begin(), state.cuts.end());
    return out;
}

int count_cut_vertices(const Graph& g) {
    return static_cast<int>(block_decomposition(g).cut_vertices.size());
}

// ---------------------------------------------------------------------------
// Edmonds blossom matching.

namespace {

struct BlossomMatcher {
    int n;
    const Graph& g;
    std::vector<int> match, parent, base;
    std::vector<char> used, in_blossom;

    explicit BlossomMatcher(const Graph& g)
        : n(g.n()), g(g), match(n, -1), parent(n, -1), base(n), used(n, 0), in_blossom(n, 0) {}

    int lca(int a, int b) {
        std::vector<char> seen(n, 0);
        int c = a;
        while (true) {
            c = base[c];
            seen[c] = 1;
            if (match[c] == -1) break;
            c = parent[match[c]];
        }
        c = b;
        while (true) {
            c = base[c];
            if (seen[c]) return c;
            c = parent[match[c]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    bool augment_from(int root) {
        used.assign(n, 0);
        parent.assign(n, -1);
        for (int i = 0; i < n; ++i) base[i] = i;
        used[root] = 1;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int to : g.neighbors(v)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    int cur = lca(v, to);
                    in_blossom.assign(n, 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i)
                        if (in_blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = 1;
                                queue.push_back(i);
                            }
                        }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) {
                        for (int u = to; u != -1;) {
                            int pv = parent[u], next = match[pv];
                            match[u] = pv;
                            match[pv] = u;
                            u = next;
                        }
                        return true;
                    }
                    used[match[to]] = 1;
                    queue.push_back(match[to]);
                }
            }
        }
        return false;
    }

    void run() {
        // greedy seed, then augmenting-path search from every exposed vertex
        for (int v = 0; v < n; ++v)
            if (match[v] == -1)
                for (int w : g.neighbors(v))
                    if (match[w] == -1) {
                        match[v] = w;
                        match[w] = v;
                        break;
                    }
        for (int v = 0; v < n; ++v)
            if (match[v] == -1) augment_from(v);
    }
};

}  // namespace

MatchingResult matching_number(const Graph& g) {
    MatchingResult out;
    if (g.n() == 0) return out;
    BlossomMatcher matcher(g);
    matcher.run();
    for (int v = 0; v < g.n(); ++v)
        if (matcher.match[v] > v) out.edges.emplace_back(v, matcher.match[v]);
    out.size = static_cast<int>(out.edges.size());
    return out;
}

namespace {

int brute_recurse(const Graph& g, std::uint64_t alive) {
    int v = -1;
    for (int i = 0; i < g.n(); ++i)
        if (alive >> i & 1) {
            bool has_nb = false;
            for (int w : g.neighbors(i))
                if (alive >> w & 1) {
                    has_nb = true;
                    break;
                }
            if (has_nb) {
                v = i;
                break;
            }
        }
    if (v == -1) return 0;
    int best = brute_recurse(g, alive & ~(1ULL << v));  // leave v unmatched
    for (int w : g.neighbors(v))
        if (alive >> w & 1)
            best = std::max(best, 1 + brute_recurse(g, alive & ~(1ULL << v) & ~(1ULL << w)));
    return best;
}

}  // namespace

int matching_number_brute(const Graph& g) {
    if (g.m() > 24) throw std::invalid_argument("matching_number_brute: edge count over budget");
    if (g.n() > 63) throw std::invalid_argument("matching_number_brute: vertex count over budget");
    std::uint64_t alive = (g.n() == 63) ? ~0ULL : ((1ULL << g.n()) - 1);
    return brute_recurse(g, alive);
}

std::vector<PendentPath> pendent_paths(const Graph& g) {
    if (g.n() < 2 || !g.is_connected())
        throw std::invalid_argument("pendent_paths: connected graph on n >= 2 required");
    std::vector<PendentPath> out;
    bool pure_path = max_degree(g) <= 2 && g.m() == g.n() - 1;
    if (pure_path) {
        int leaf = 0;
        while (g.degree(leaf) != 1) ++leaf;
        PendentPath path;
        path.anchor = -1;
        int prev = -1, cur = leaf;
        while (cur != -1) {
            path.vertices.push_back(cur);
            int next = -1;
            for (int w : g.neighbors(cur))
                if (w != prev) next = w;
            prev = cur;
            cur = next;
        }
        out.push_back(std::move(path));
        return out;
    }
    for (int leaf = 0; leaf < g.n(); ++leaf) {
        if (g.degree(leaf) != 1) continue;
        PendentPath path;
        int prev = -1, cur = leaf;
        while (g.degree(cur) <= 2) {
            path.vertices.push_back(cur);
            int next = -1;
            for (int w : g.neighbors(cur))
                if (w != prev) next = w;
            prev = cur;
            cur = next;
        }
        path.anchor = cur;
        out.push_back(std::move(path));
    }
    return out;
}

bool is_regular(const Graph& g) {
    if (g.n() == 0) return true;
    return max_degree(g) == min_degree(g);
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

int min_degree(const Graph& g) {
    if (g.n() == 0) return 0;
    int d = g.degree(0);
    for (int v = 1; v < g.n(); ++v) d = std::min(d, g.degree(v));
    return d;
}

}  // namespace alphaspectra
