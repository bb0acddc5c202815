#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace alphaspectra {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Values are immutable after construction; every transformation returns a
/// new Graph, so instances can be shared freely across worker threads.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int n() const { return n_; }
    int m() const { return m_; }

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;
    std::vector<Edge> edges() const;

    bool is_connected() const;

    /// Attach a path of `len` new vertices to v; the vertex adjacent to v
    /// gets the lowest new index, the leaf the highest. len = 0 is a no-op.
    Graph attach_path(int v, int len) const;

    /// Induced subgraph on the given vertex subset, relabeled 0..|s|-1 in
    /// the order induced by sorting s.
    Graph induced_subgraph(std::span<const int> s) const;

    /// Relabel: vertex v becomes perm[v]. perm must be a permutation of 0..n-1.
    Graph permuted(std::span<const int> perm) const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Byte string identifying an isomorphism class: the graph6 encoding of the
/// canonically relabeled graph. Equal codes <=> isomorphic graphs.
struct CanonicalCode {
    std::string bytes;
    auto operator<=>(const CanonicalCode&) const = default;
};

/// Exact canonicalization by refined backtracking over vertex orderings,
/// maximizing the adjacency bit string. Budgeted for n <= 16.
CanonicalCode canonical_code(const Graph& g);

/// The canonical representative itself (decode of canonical_code).
Graph canonical_form(const Graph& g);

/// Low-level hook for bulk enumeration: canonical code straight from
/// adjacency bit masks (adj[v] has bit w set iff vw is an edge), skipping
/// Graph construction entirely.
std::string canonical_code_from_masks(std::span<const std::uint32_t> adj, int n);

bool are_isomorphic(const Graph& a, const Graph& b);

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset(offset) {}
    std::size_t offset;
};

/// graph6 short form (n <= 62), byte-exact per the published format.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace alphaspectra
