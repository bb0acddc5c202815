#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "alphaspectra/enumeration.hpp"
#include "alphaspectra/families.hpp"
#include "alphaspectra/spectral.hpp"

using namespace alphaspectra;
using doctest::Approx;

namespace {
const double kGrid[] = {0.0, 0.25, 0.5, 0.75, 0.99};
constexpr double kPi = 3.14159265358979323846;
}  // namespace

TEST_CASE("alpha parameter domain") {
    CHECK_NOTHROW(AlphaParam(0.0));
    CHECK_NOTHROW(AlphaParam(0.99));
    CHECK_THROWS_AS(AlphaParam(1.0), std::invalid_argument);
    CHECK_THROWS_AS(AlphaParam(-0.01), std::invalid_argument);
    CHECK_THROWS_AS(AlphaParam(std::nan("")), std::invalid_argument);
}

TEST_CASE("alpha matrix assembly") {
    Graph k2(2, {{0, 1}});
    DenseMatrix m0 = build_alpha_matrix(k2, AlphaParam(0.0));
    CHECK(m0.at(0, 0) == 0.0);
    CHECK(m0.at(0, 1) == 1.0);
    CHECK(m0.at(1, 0) == 1.0);

    DenseMatrix mh = build_alpha_matrix(k2, AlphaParam(0.5));
    CHECK(mh.at(0, 0) == 0.5);
    CHECK(mh.at(0, 1) == 0.5);

    Graph p3 = make_basic(BasicKind::Path, 3);
    DenseMatrix mq = build_alpha_matrix(p3, AlphaParam(0.25));
    CHECK(mq.at(0, 0) == 0.25);
    CHECK(mq.at(1, 1) == 0.5);
    CHECK(mq.at(2, 2) == 0.25);
    CHECK(mq.at(0, 1) == 0.75);
    CHECK(mq.at(0, 2) == 0.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(mq.at(i, j) == mq.at(j, i));
}

TEST_CASE("regular graphs have rho equal to the degree") {
    CHECK(spectral_radius(make_basic(BasicKind::Cycle, 6), AlphaParam(0.7)).rho == Approx(2.0).epsilon(1e-10));
    for (double a : kGrid) {
        CHECK(std::abs(spectral_radius(make_basic(BasicKind::Complete, 5), AlphaParam(a)).rho - 4.0) < 1e-10);
        CHECK(std::abs(spectral_radius(make_basic(BasicKind::Cycle, 9), AlphaParam(a)).rho - 2.0) < 1e-10);
    }
}

TEST_CASE("path and star closed forms at alpha 0") {
    double golden = 2.0 * std::cos(kPi / 5.0);  // rho_0(P_4)
    CHECK(std::abs(spectral_radius(make_basic(BasicKind::Path, 4), AlphaParam(0.0)).rho - golden) < 1e-9);
    CHECK(std::abs(spectral_radius(make_basic(BasicKind::Star, 5), AlphaParam(0.0)).rho - 2.0) < 1e-10);
    CHECK(std::abs(spectral_radius_oracle(make_basic(BasicKind::Path, 4), AlphaParam(0.0)) - golden) < 1e-9);
}

TEST_CASE("perron structure of the result") {
    Graph g = make_gnk(9, 4);
    for (double a : kGrid) {
        SpectralResult r = spectral_radius(g, AlphaParam(a));
        double norm2 = 0.0;
        for (double x : r.perron) {
            CHECK(x > 0.0);
            norm2 += x * x;
        }
        CHECK(std::abs(std::sqrt(norm2) - 1.0) < 1e-12);
        CHECK(r.residual <= 1e-12);
        CHECK(r.converged);
        CHECK(r.cw_lower <= r.rho + 1e-12);
        CHECK(r.cw_upper >= r.rho - 1e-12);
        CHECK(eigen_residual(g, AlphaParam(a), r.perron, r.rho) <= 1e-12);
    }
}

TEST_CASE("errors: disconnected input and iteration budget") {
    Graph disc(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(spectral_radius(disc, AlphaParam(0.5)), DisconnectedError);

    SpectralOptions tight;
    tight.max_iterations = 2;
    try {
        spectral_radius(make_basic(BasicKind::Path, 5), AlphaParam(0.0), tight);
        FAIL("expected NonConvergenceError");
    } catch (const NonConvergenceError& e) {
        CHECK(e.best.iterations == 2);
        CHECK(e.best.residual > 1e-12);
        CHECK_FALSE(e.best.converged);
        CHECK(e.best.rho > 0.0);
    }
}

TEST_CASE("oracle matches power iteration on every connected graph n <= 5") {
    CHECK(spectral_radius_oracle(make_basic(BasicKind::Complete, 3), AlphaParam(0.5)) == Approx(2.0).epsilon(1e-10));
    CHECK(spectral_radius_oracle(Graph(2, {{0, 1}}), AlphaParam(0.0)) == Approx(1.0).epsilon(1e-10));
    for (int n = 1; n <= 5; ++n)
        for (const Graph& g : cached_connected_graphs(n))
            for (double a : kGrid) {
                double power = spectral_radius(g, AlphaParam(a)).rho;
                double dense = spectral_radius_oracle(g, AlphaParam(a));
                CHECK(std::abs(power - dense) <= 1e-8);
            }
    CHECK_THROWS_AS(spectral_radius_oracle(make_basic(BasicKind::Path, 13), AlphaParam(0.0)),
                    std::invalid_argument);
}

TEST_CASE("rayleigh quotient") {
    Graph k2(2, {{0, 1}});
    std::vector<double> ones{1.0, 1.0};
    CHECK(rayleigh_quotient(k2, AlphaParam(0.0), ones) == Approx(1.0));

    Graph c4 = make_basic(BasicKind::Cycle, 4);
    std::vector<double> e0{1.0, 0.0, 0.0, 0.0};
    CHECK(rayleigh_quotient(c4, AlphaParam(0.5), e0) == Approx(1.0));

    std::vector<double> zero{0.0, 0.0, 0.0, 0.0};
    CHECK_THROWS_AS(rayleigh_quotient(c4, AlphaParam(0.5), zero), std::invalid_argument);

    SUBCASE("perron vector reproduces rho; random vectors stay below") {
        std::mt19937 rng(99);
        std::normal_distribution<double> gauss;
        for (const Graph& g : {make_gnk(8, 3), make_ank(9, 3), make_basic(BasicKind::Cycle, 7)}) {
            for (double a : {0.0, 0.5, 0.99}) {
                SpectralResult r = spectral_radius(g, AlphaParam(a));
                CHECK(rayleigh_quotient(g, AlphaParam(a), r.perron) == Approx(r.rho).epsilon(1e-11));
                for (int trial = 0; trial < 200; ++trial) {
                    std::vector<double> x(g.n());
                    for (double& t : x) t = gauss(rng);
                    CHECK(rayleigh_quotient(g, AlphaParam(a), x) <= r.rho + 1e-9);
                }
            }
        }
    }
}

TEST_CASE("eigen residual") {
    Graph k2(2, {{0, 1}});
    double inv = 1.0 / std::sqrt(2.0);
    std::vector<double> exact{inv, inv};
    CHECK(eigen_residual(k2, AlphaParam(0.0), exact, 1.0) == Approx(0.0).epsilon(1e-15));

    Graph c5 = make_basic(BasicKind::Cycle, 5);
    SpectralResult r = spectral_radius(c5, AlphaParam(0.0));
    std::vector<double> perturbed = r.perron;
    perturbed[0] += 0.05;
    CHECK(eigen_residual(c5, AlphaParam(0.0), perturbed, r.rho) > 1e-3);
}

TEST_CASE("degree bounds and strict irregular bound") {
    for (int n = 2; n <= 6; ++n)
        for (const Graph& g : cached_connected_graphs(n))
            for (double a : {0.0, 0.5, 0.99}) {
                double rho = spectral_radius(g, AlphaParam(a)).rho;
                int dmin = g.degree(0), dmax = 0;
                for (int v = 0; v < g.n(); ++v) {
                    dmin = std::min(dmin, g.degree(v));
                    dmax = std::max(dmax, g.degree(v));
                }
                CHECK(rho >= dmin - 1e-10);
                CHECK(rho <= dmax + 1e-10);
                if (dmin != dmax) CHECK(rho < dmax - 1e-9);
            }
}

TEST_CASE("edge and induced-subgraph monotonicity") {
    for (const Graph& g : {make_basic(BasicKind::Path, 5), make_gnk(6, 2),
                           make_basic(BasicKind::Cycle, 6)}) {
        for (double a : {0.0, 0.5, 0.99}) {
            double base = spectral_radius(g, AlphaParam(a)).rho;
            for (int u = 0; u < g.n(); ++u)
                for (int v = u + 1; v < g.n(); ++v) {
                    if (g.has_edge(u, v)) continue;
                    CHECK(spectral_radius(g.with_edge(u, v), AlphaParam(a)).rho > base + 1e-9);
                }
        }
    }

    SUBCASE("proper connected induced subgraph has smaller rho") {
        Graph g = make_gnk(7, 2);
        std::vector<int> s{0, 1, 2, 3, 4};  // clique plus one path vertex
        Graph h = g.induced_subgraph(s);
        REQUIRE(h.is_connected());
        for (double a : kGrid)
            CHECK(spectral_radius(h, AlphaParam(a)).rho <
                  spectral_radius(g, AlphaParam(a)).rho - 1e-9);
    }
}
