#include "alphaspectra/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace alphaspectra {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), adj_(std::max(n, 0)) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (a == b) throw std::invalid_argument("graph: self-loop");
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    m_ = 0;
    for (auto& nb : adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        m_ += static_cast<int>(nb.size());
    }
    m_ /= 2;
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("graph: vertex out of range");
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int v = 0; v < n_; ++v)
        for (int w : adj_[v])
            if (v < w) out.emplace_back(v, w);
    return out;
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj_[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n_;
}

Graph Graph::attach_path(int v, int len) const {
    check_vertex(v);
    if (len < 0) throw std::invalid_argument("attach_path: negative length");
    if (len == 0) return *this;
    auto es = edges();
    int prev = v;
    for (int i = 0; i < len; ++i) {
        es.emplace_back(prev, n_ + i);
        prev = n_ + i;
    }
    return Graph(n_ + len, es);
}

Graph Graph::induced_subgraph(std::span<const int> s) const {
    if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    std::vector<int> verts(s.begin(), s.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> index(n_, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) {
        check_vertex(verts[i]);
        index[verts[i]] = static_cast<int>(i);
    }
    std::vector<Edge> es;
    for (int v : verts)
        for (int w : adj_[v])
            if (v < w && index[w] >= 0) es.emplace_back(index[v], index[w]);
    return Graph(static_cast<int>(verts.size()), es);
}

Graph Graph::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permuted: wrong permutation size");
    std::vector<char> hit(n_, 0);
    for (int p : perm) {
        if (p < 0 || p >= n_ || hit[p]) throw std::invalid_argument("permuted: not a permutation");
        hit[p] = 1;
    }
    std::vector<Edge> es;
    es.reserve(m_);
    for (auto [a, b] : edges()) es.emplace_back(perm[a], perm[b]);
    return Graph(n_, es);
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("with_edge: self-loop");
    auto es = edges();
    es.emplace_back(u, v);
    return Graph(n_, es);
}

Graph Graph::without_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("without_edge: edge not present");
    std::vector<Edge> es;
    es.reserve(m_ - 1);
    for (auto e : edges())
        if (!(e.first == std::min(u, v) && e.second == std::max(u, v))) es.push_back(e);
    return Graph(n_, es);
}

// ---------------------------------------------------------------------------
// graph6

namespace {
constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'
}  // namespace

std::string graph6_encode(const Graph& g) {
    int n = g.n();
    if (n > 62) throw std::invalid_argument("graph6_encode: n > 62 unsupported (short form only)");
    std::string out;
    out.push_back(static_cast<char>(n + kG6Lo));
    int bits = n * (n - 1) / 2;
    int acc = 0, nacc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nacc == 6) {
                out.push_back(static_cast<char>(acc + kG6Lo));
                acc = nacc = 0;
            }
        }
    }
    if (bits % 6 != 0) out.push_back(static_cast<char>((acc << (6 - bits % 6)) + kG6Lo));
    return out;
}

Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw ParseError("graph6: empty string", 0);
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126) throw ParseError("graph6: long form (n > 62) unsupported", 0);
    if (c0 < kG6Lo || c0 > kG6Hi) throw ParseError("graph6: invalid order byte", 0);
    int n = c0 - kG6Lo;
    int bits = n * (n - 1) / 2;
    std::size_t need = 1 + (bits + 5) / 6;
    if (text.size() < need)
        throw ParseError("graph6: truncated body", text.size());
    if (text.size() > need)
        throw ParseError("graph6: trailing bytes", need);
    std::vector<Edge> es;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            std::size_t byte = 1 + bit / 6;
            unsigned char c = static_cast<unsigned char>(text[byte]);
            if (c < kG6Lo || c > kG6Hi) throw ParseError("graph6: invalid body byte", byte);
            if ((c - kG6Lo) >> (5 - bit % 6) & 1) es.emplace_back(i, j);
        }
    }
    // padding bits must be zero
    if (bits % 6 != 0) {
        unsigned char last = static_cast<unsigned char>(text[need - 1]) - kG6Lo;
        if (last & ((1 << (6 - bits % 6)) - 1))
            throw ParseError("graph6: nonzero padding bits", need - 1);
    }
    return Graph(n, es);
}

// ---------------------------------------------------------------------------
// Canonicalization: backtracking over vertex orderings with prefix pruning,
// maximizing the upper-triangle bit string in graph6 column order. Exact for
// n <= 16; a per-call node budget guards pathological symmetric inputs. The
// hot path works on adjacency bit masks only, with no per-node allocations,
// so the exhaustive n = 7 scan stays cheap.

namespace {

struct CanonSearch {
    int n = 0;
    const std::uint32_t* adj = nullptr;
    std::array<int, 16> perm{};
    std::array<std::uint32_t, 16> col{};  // best column per slot; kUnset = none yet
    std::array<int, 16> best_perm{};
    std::uint32_t used = 0;
    long nodes = 0;
    static constexpr long kNodeBudget = 50'000'000;
    static constexpr std::uint32_t kUnset = ~0u;

    void dfs(int j) {
        if (++nodes > kNodeBudget)
            throw std::runtime_error("canonical_code: search budget exceeded");
        if (j == n) {
            best_perm = perm;
            return;
        }
        std::uint32_t vals[16];
        int order[16];
        int count = 0;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1u) continue;
            std::uint32_t c = 0;
            for (int i = 0; i < j; ++i) c = (c << 1) | ((adj[v] >> perm[i]) & 1u);
            // insertion sort: value descending, vertex index ascending on ties
            int pos = count++;
            while (pos > 0 && vals[pos - 1] < c) {
                vals[pos] = vals[pos - 1];
                order[pos] = order[pos - 1];
                --pos;
            }
            vals[pos] = c;
            order[pos] = v;
        }
        for (int idx = 0; idx < count; ++idx) {
            std::uint32_t c = vals[idx];
            if (col[j] != kUnset && c < col[j]) break;
            if (col[j] == kUnset || c > col[j]) {
                col[j] = c;
                for (int d = j + 1; d < n; ++d) col[d] = kUnset;
            }
            int v = order[idx];
            perm[j] = v;
            used |= 1u << v;
            dfs(j + 1);
            used &= ~(1u << v);
        }
    }
};

void run_canon(const std::uint32_t* adj, int n, CanonSearch& search) {
    if (n > 16) throw std::invalid_argument("canonical_code: n > 16 over budget");
    search.n = n;
    search.adj = adj;
    search.col.fill(CanonSearch::kUnset);
    if (n > 0) search.dfs(0);
}

std::string graph6_from_perm(const std::uint32_t* adj, int n, const std::array<int, 16>& perm) {
    std::string out;
    out.push_back(static_cast<char>(n + kG6Lo));
    int bits = n * (n - 1) / 2;
    int acc = 0, nacc = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | static_cast<int>((adj[perm[i]] >> perm[j]) & 1u);
            if (++nacc == 6) {
                out.push_back(static_cast<char>(acc + kG6Lo));
                acc = nacc = 0;
            }
        }
    }
    if (bits % 6 != 0) out.push_back(static_cast<char>((acc << (6 - bits % 6)) + kG6Lo));
    return out;
}

}  // namespace

std::string canonical_code_from_masks(std::span<const std::uint32_t> adj, int n) {
    CanonSearch search;
    run_canon(adj.data(), n, search);
    return graph6_from_perm(adj.data(), n, search.best_perm);
}

Graph canonical_form(const Graph& g) {
    int n = g.n();
    if (n > 16) throw std::invalid_argument("canonical_code: n > 16 over budget");
    if (n <= 1) return g;
    std::array<std::uint32_t, 16> adj{};
    for (auto [a, b] : g.edges()) {
        adj[a] |= 1u << b;
        adj[b] |= 1u << a;
    }
    CanonSearch search;
    run_canon(adj.data(), n, search);
    // best_perm lists vertices by canonical slot; permuted() wants v -> new label
    std::vector<int> relabel(n);
    for (int slot = 0; slot < n; ++slot) relabel[search.best_perm[slot]] = slot;
    return g.permuted(relabel);
}

CanonicalCode canonical_code(const Graph& g) {
    int n = g.n();
    if (n > 16) throw std::invalid_argument("canonical_code: n > 16 over budget");
    std::array<std::uint32_t, 16> adj{};
    for (auto [a, b] : g.edges()) {
        adj[a] |= 1u << b;
        adj[b] |= 1u << a;
    }
    return CanonicalCode{canonical_code_from_masks({adj.data(), static_cast<std::size_t>(n)}, n)};
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    return canonical_code(a) == canonical_code(b);
}

}  // namespace alphaspectra
