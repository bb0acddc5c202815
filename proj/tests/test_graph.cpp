#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "alphaspectra/families.hpp"
#include "alphaspectra/graph.hpp"

using namespace alphaspectra;

TEST_CASE("construction and invariants") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.n() == 3);
    CHECK(k3.m() == 3);
    CHECK(k3.degree(0) == 2);

    Graph single(1, {});
    CHECK(single.n() == 1);
    CHECK(single.m() == 0);

    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.degree(0) == 1);
    CHECK(p4.degree(1) == 2);
    CHECK(p4.degree(2) == 2);
    CHECK(p4.degree(3) == 1);

    SUBCASE("duplicate input edges collapse") {
        Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
        CHECK(g.m() == 1);
    }
    SUBCASE("adjacency lists are sorted and symmetric") {
        Graph g(5, {{4, 0}, {2, 0}, {0, 3}});
        CHECK(g.neighbors(0) == std::vector<int>{2, 3, 4});
        for (int v = 0; v < g.n(); ++v)
            for (int w : g.neighbors(v)) CHECK(g.has_edge(w, v));
    }
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(k3.degree(7), std::out_of_range);
}

TEST_CASE("connectivity") {
    CHECK(make_basic(BasicKind::Path, 6).is_connected());
    Graph two_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(two_edges.is_connected());
    CHECK(make_gnk(7, 3).is_connected());
}

TEST_CASE("attach_path") {
    Graph k3 = make_basic(BasicKind::Complete, 3);
    Graph g = k3.attach_path(0, 2);
    CHECK(g.n() == 5);
    CHECK(g.m() == 5);
    CHECK(g.degree(0) == 3);
    int deg1 = 0, deg2 = 0;
    for (int v = 3; v < 5; ++v) {
        deg1 += g.degree(v) == 1;
        deg2 += g.degree(v) == 2;
    }
    CHECK(deg1 == 1);
    CHECK(deg2 == 1);

    CHECK(make_basic(BasicKind::Path, 1).attach_path(0, 3) ==
          make_basic(BasicKind::Path, 4));
    CHECK(k3.attach_path(1, 0) == k3);

    SUBCASE("K4 with a pendant edge per vertex is G_{8,4}") {
        Graph g84 = make_basic(BasicKind::Complete, 4);
        for (int v = 0; v < 4; ++v) g84 = g84.attach_path(v, 1);
        CHECK(are_isomorphic(g84, make_gnk(8, 4)));
    }
}

TEST_CASE("induced subgraph") {
    Graph k4 = make_basic(BasicKind::Complete, 4);
    std::vector<int> tri{0, 1, 2};
    CHECK(k4.induced_subgraph(tri) == make_basic(BasicKind::Complete, 3));

    Graph p5 = make_basic(BasicKind::Path, 5);
    std::vector<int> alternating{0, 2, 4};
    Graph iso3 = p5.induced_subgraph(alternating);
    CHECK(iso3.n() == 3);
    CHECK(iso3.m() == 0);

    CHECK_THROWS_AS(k4.induced_subgraph(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(k4.induced_subgraph(std::vector<int>{9}), std::out_of_range);
}

TEST_CASE("canonical codes identify isomorphism classes") {
    Graph p3 = make_basic(BasicKind::Path, 3);
    for (std::vector<int> perm : {std::vector<int>{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {1, 2, 0}})
        CHECK(canonical_code(p3.permuted(perm)) == canonical_code(p3));

    CHECK(canonical_code(make_basic(BasicKind::Path, 4)) !=
          canonical_code(make_basic(BasicKind::Star, 4)));

    SUBCASE("all 6! labelings of C6 share one code") {
        Graph c6 = make_basic(BasicKind::Cycle, 6);
        std::vector<int> perm(6);
        std::iota(perm.begin(), perm.end(), 0);
        std::set<std::string> codes;
        do {
            codes.insert(canonical_code(c6.permuted(perm)).bytes);
        } while (std::next_permutation(perm.begin(), perm.end()));
        CHECK(codes.size() == 1);
    }

    SUBCASE("random permutation invariance, assorted graphs up to n = 9") {
        std::mt19937 rng(20240817);
        std::vector<Graph> corpus = {
            make_basic(BasicKind::Path, 9),      make_basic(BasicKind::Cycle, 9),
            make_basic(BasicKind::Star, 9),      make_basic(BasicKind::Complete, 6),
            make_gnk(9, 4),                      make_ank(9, 3),
            make_smith(SmithId::H8),             make_gnk(8, 2),
            make_gpsq(FamilySpec::parse("cycle:4"), 3, 1, 1).graph};
        for (const Graph& g : corpus) {
            CanonicalCode expected = canonical_code(g);
            std::vector<int> perm(g.n());
            std::iota(perm.begin(), perm.end(), 0);
            for (int trial = 0; trial < 100; ++trial) {
                std::shuffle(perm.begin(), perm.end(), rng);
                CHECK(canonical_code(g.permuted(perm)) == expected);
            }
        }
    }

    CHECK_THROWS_AS(canonical_code(make_basic(BasicKind::Path, 17)), std::invalid_argument);
}

TEST_CASE("graph6 round trips and fixed encodings") {
    CHECK(graph6_encode(make_basic(BasicKind::Complete, 3)) == "Bw");
    CHECK(graph6_encode(Graph(1, {})) == "@");
    Graph p7 = make_basic(BasicKind::Path, 7);
    CHECK(graph6_decode(graph6_encode(p7)) == p7);

    SUBCASE("labeled round trip is the identity on random graphs") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 1 + static_cast<int>(rng() % 12);
            std::vector<Edge> es;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng() & 1) es.emplace_back(i, j);
            Graph g(n, es);
            CHECK(graph6_decode(graph6_encode(g)) == g);
        }
    }

    SUBCASE("malformed input reports the byte offset") {
        CHECK_THROWS_AS(graph6_decode(""), ParseError);
        try {
            graph6_decode("D");  // order 5 needs body bytes
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.offset == 1);
        }
        try {
            graph6_decode(std::string("Bw") + "\x01");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.offset == 2);
        }
        CHECK_THROWS_AS(graph6_decode("~~~"), ParseError);  // long form unsupported
    }

    CHECK_THROWS_AS(graph6_encode(make_basic(BasicKind::Path, 63)), std::invalid_argument);
}

TEST_CASE("canonical form is a relabeling with the same code") {
    Graph g = make_gnk(7, 3);
    Graph canon = canonical_form(g);
    CHECK(canon.n() == g.n());
    CHECK(canon.m() == g.m());
    CHECK(graph6_encode(canon) == canonical_code(g).bytes);
    CHECK(are_isomorphic(g, canon));
}
