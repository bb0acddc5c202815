#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "alphaspectra/enumeration.hpp"
#include "alphaspectra/families.hpp"
#include "alphaspectra/structure.hpp"

using namespace alphaspectra;

namespace {

// Deletion-based cut-vertex oracle: v is a cut vertex iff g - v disconnects.
int cut_vertices_by_deletion(const Graph& g) {
    if (g.n() <= 2) return 0;
    int count = 0;
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> rest;
        for (int w = 0; w < g.n(); ++w)
            if (w != v) rest.push_back(w);
        if (!g.induced_subgraph(rest).is_connected()) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("block decomposition") {
    BlockDecomposition p4 = block_decomposition(make_basic(BasicKind::Path, 4));
    CHECK(p4.blocks.size() == 3);
    CHECK(p4.cut_vertices == std::vector<int>{1, 2});

    BlockDecomposition k5 = block_decomposition(make_basic(BasicKind::Complete, 5));
    CHECK(k5.blocks.size() == 1);
    CHECK(k5.cut_vertices.empty());

    BlockDecomposition gnk = block_decomposition(make_gnk(7, 3));
    CHECK(gnk.blocks.size() == 4);  // the K4 plus three pendant edges
    CHECK(gnk.cut_vertices.size() == 3);

    CHECK_THROWS_AS(block_decomposition(Graph(4, {{0, 1}, {2, 3}})), std::invalid_argument);

    SUBCASE("every edge in exactly one block; cut vertex iff in >= 2 blocks") {
        for (int n = 2; n <= 6; ++n)
            for (const Graph& g : cached_connected_graphs(n)) {
                BlockDecomposition d = block_decomposition(g);
                std::multiset<Edge> covered;
                for (const auto& block : d.blocks)
                    for (std::size_t i = 0; i < block.size(); ++i)
                        for (std::size_t j = i + 1; j < block.size(); ++j)
                            if (g.has_edge(block[i], block[j]))
                                covered.insert({block[i], block[j]});
                CHECK(static_cast<int>(covered.size()) == g.m());
                for (auto e : g.edges()) CHECK(covered.count(e) == 1);

                std::vector<int> membership(g.n(), 0);
                for (const auto& block : d.blocks)
                    for (int v : block) ++membership[v];
                for (int v = 0; v < g.n(); ++v) {
                    bool is_cut = std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), v);
                    CHECK(is_cut == (membership[v] >= 2));
                }
            }
    }
}

TEST_CASE("cut vertex counts") {
    CHECK(count_cut_vertices(make_basic(BasicKind::Cycle, 8)) == 0);
    CHECK(count_cut_vertices(make_basic(BasicKind::Path, 8)) == 6);
    CHECK(count_cut_vertices(make_gnk(9, 4)) == 4);
    CHECK(count_cut_vertices(Graph(1, {})) == 0);

    SUBCASE("agrees with the deletion oracle") {
        for (int n = 1; n <= 6; ++n)
            for (const Graph& g : cached_connected_graphs(n))
                CHECK(count_cut_vertices(g) == cut_vertices_by_deletion(g));
        for (int n : {8, 9})
            for (const Graph& t : cached_trees(n))
                CHECK(count_cut_vertices(t) == cut_vertices_by_deletion(t));
        for (const Graph& g : {make_gnk(9, 5), make_ank(10, 4),
                               make_gpsq(FamilySpec::parse("complete:4"), 3, 2, 1).graph})
            CHECK(count_cut_vertices(g) == cut_vertices_by_deletion(g));
    }
}

TEST_CASE("maximum matching") {
    CHECK(matching_number(make_basic(BasicKind::Path, 4)).size == 2);
    CHECK(matching_number(make_basic(BasicKind::Star, 6)).size == 1);
    CHECK(matching_number(make_ank(10, 4)).size == 4);
    CHECK(matching_number(make_basic(BasicKind::Cycle, 5)).size == 2);  // odd cycle
    CHECK(matching_number(make_basic(BasicKind::Complete, 4)).size == 2);
    CHECK(matching_number(Graph(1, {})).size == 0);

    SUBCASE("witness is a matching of the reported size") {
        for (const Graph& g : {make_gnk(8, 3), make_basic(BasicKind::Cycle, 9), make_ank(12, 6)}) {
            MatchingResult r = matching_number(g);
            CHECK(static_cast<int>(r.edges.size()) == r.size);
            CHECK(r.size <= g.n() / 2);
            std::set<int> touched;
            for (auto [a, b] : r.edges) {
                CHECK(g.has_edge(a, b));
                CHECK(touched.insert(a).second);
                CHECK(touched.insert(b).second);
            }
        }
    }

    SUBCASE("agrees with the exhaustive oracle") {
        for (int n = 1; n <= 7; ++n)
            for (const Graph& g : cached_connected_graphs(n))
                CHECK(matching_number(g).size == matching_number_brute(g));
        for (int n = 8; n <= 10; ++n)
            for (const Graph& t : cached_trees(n))
                CHECK(matching_number(t).size == matching_number_brute(t));
    }

    CHECK(matching_number_brute(make_ank(8, 4)) == 4);
    CHECK_THROWS_AS(matching_number_brute(make_basic(BasicKind::Complete, 8)),
                    std::invalid_argument);  // 28 edges over budget
}

TEST_CASE("pendent paths") {
    SUBCASE("star") {
        auto paths = pendent_paths(make_basic(BasicKind::Star, 5));
        CHECK(paths.size() == 4);
        for (const auto& p : paths) {
            CHECK(p.anchor == 0);
            CHECK(p.vertices.size() == 1);
        }
    }
    SUBCASE("gnk(7,3): three pendant edges at clique vertices") {
        auto paths = pendent_paths(make_gnk(7, 3));
        CHECK(paths.size() == 3);
        for (const auto& p : paths) {
            CHECK(p.vertices.size() == 1);
            CHECK(p.anchor < 4);
        }
    }
    SUBCASE("gpsq paths are reported outside-in") {
        PendantPathGraph g = make_gpsq(FamilySpec::parse("cycle:3"), 3, 0, 2);
        auto paths = pendent_paths(g.graph);
        REQUIRE(paths.size() == 2);
        std::set<std::size_t> lens{paths[0].vertices.size(), paths[1].vertices.size()};
        CHECK(lens == std::set<std::size_t>{2, 3});
        for (const auto& p : paths) {
            CHECK(p.anchor == g.v);
            CHECK(g.graph.degree(p.vertices.front()) == 1);   // leaf first
            CHECK(g.graph.has_edge(p.vertices.back(), p.anchor));
        }
    }
    SUBCASE("pure path gets one sentinel-anchored path") {
        auto paths = pendent_paths(make_basic(BasicKind::Path, 6));
        REQUIRE(paths.size() == 1);
        CHECK(paths[0].anchor == -1);
        CHECK(paths[0].vertices.size() == 6);
    }
    SUBCASE("cycles have none") {
        CHECK(pendent_paths(make_basic(BasicKind::Cycle, 7)).empty());
    }
    SUBCASE("A(n,k) anchored pendent paths have length at most 2") {
        // A(4,2) = P_4 is a pure path and gets the sentinel report instead
        for (int n = 4; n <= 14; ++n)
            for (int k = 1; 2 * k <= n; ++k)
                for (const auto& p : pendent_paths(make_ank(n, k)))
                    if (p.anchor != -1) CHECK(p.vertices.size() <= 2);
    }
    CHECK_THROWS_AS(pendent_paths(Graph(1, {})), std::invalid_argument);
}

TEST_CASE("degree helpers") {
    CHECK(is_regular(make_basic(BasicKind::Cycle, 7)));
    CHECK(max_degree(make_basic(BasicKind::Cycle, 7)) == 2);
    CHECK_FALSE(is_regular(make_basic(BasicKind::Path, 3)));
    CHECK(max_degree(make_basic(BasicKind::Path, 3)) == 2);
    CHECK(max_degree(make_ank(9, 3)) == 6);
    CHECK(min_degree(make_ank(9, 3)) == 1);
}
