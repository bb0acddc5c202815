#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alphaspectra/graph.hpp"

namespace alphaspectra {

enum class BasicKind { Path, Cycle, Star, Complete };
enum class SmithId { H1, H2, H3, H4, H5, H6, H7, H8 };

/// Declarative description of a named family instance, with a canonical text
/// form used by the CLI ("gnk:8,5", "gpsq:cycle4,p=3,s=1,q=1", "smith:H6",
/// "path:5", "ank:9,3", "smith:H1,12").
struct FamilySpec {
    enum class Kind { Path, Cycle, Star, Complete, Smith, Gpsq, Gnk, Ank };

    Kind kind = Kind::Path;
    int n = 0;                      // basic size, or n of gnk/ank
    int k = 0;                      // k of gnk/ank
    SmithId smith = SmithId::H1;
    int smith_size = 0;             // 0 = smallest (variable families) / fixed size
    BasicKind core = BasicKind::Cycle;  // gpsq core kind (Cycle or Complete)
    int core_n = 0, p = 0, s = 0, q = 0;

    static FamilySpec parse(std::string_view text);  // throws ParseError with position
    std::string str() const;
    Graph build() const;
};

/// A Graph plus the labeled roles of the G_{p,s,q}(u,v) construction.
/// u_path / v_path run outside-in: index 0 is the leaf, the last entry is
/// adjacent to u (resp. v). w_path runs w_0 = v, ..., w_s = u.
struct PendantPathGraph {
    Graph graph;
    int u = 0, v = 0;
    int p = 0, s = 0, q = 0;
    std::vector<int> u_path;
    std::vector<int> v_path;
    std::vector<int> w_path;
    std::optional<FamilySpec> core_spec;  // set when built by make_gpsq
};

/// Path labeled 0..n-1 in order; cycle likewise with the closing edge;
/// star center 0; complete graph on 0..n-1.
Graph make_basic(BasicKind kind, int n);

/// The Smith list adopted here (connected graphs with adjacency spectral
/// radius <= 2, beyond paths and cycles). T(a,b,c) is the spider with legs
/// a,b,c from center 0.
///   H1 = T(1,1,size-3), size >= 4     (radius < 2)
///   H2 = T(1,2,2), H3 = T(1,2,3), H4 = T(1,2,4)          (radius < 2)
///   H5 = double fork on size >= 5 vertices (smallest K_{1,4}) (radius = 2)
///   H6 = T(2,2,2), H7 = T(1,3,3), H8 = T(1,2,5)          (radius = 2)
/// size is ignored by the fixed members; 0 selects the smallest member.
Graph make_smith(SmithId id, int size = 0);

/// G_{p,s,q}(u,v) over a Cycle(c) or Complete(c) core, c >= 3. For s = 0,
/// u = v = core vertex 0; for s >= 2 the core edge uv is replaced by a path
/// with s-1 interior vertices of degree 2. p >= 1, q >= 0.
PendantPathGraph make_gpsq(const FamilySpec& core, int p, int s, int q);

/// Lower-level variant for an explicit host: u = v (s = 0), or u,v joined by
/// an internal path whose interior vertices have degree 2 in the host (the
/// shortest such path is taken; its length is s). d(u), d(v) >= 2 required.
PendantPathGraph make_gpsq_host(const Graph& host, int u, int v, int p, int q);

/// K_{n-k} with pendant paths of near-equal lengths (longer paths on
/// lower-indexed clique vertices); exactly k cut vertices. Requires n-k >= 2.
Graph make_gnk(int n, int k);

/// Star on n-k+1 vertices (center 0) with a pendant edge on each of the
/// first k-1 leaves; matching number k. Requires n >= 2k >= 2.
Graph make_ank(int n, int k);

}  // namespace alphaspectra
