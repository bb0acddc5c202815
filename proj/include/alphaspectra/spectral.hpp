#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "alphaspectra/graph.hpp"

namespace alphaspectra {

/// The convex-combination weight in alpha*D + (1-alpha)*A. The degenerate
/// alpha = 1 (pure degree matrix) is rejected: the Perron structure every
/// result here relies on needs alpha < 1.
struct AlphaParam {
    explicit AlphaParam(double a) : value(a) {
        if (!(a >= 0.0 && a < 1.0))
            throw std::invalid_argument("alpha must lie in [0, 1)");
    }
    double value;
};

struct DenseMatrix {
    int n = 0;
    std::vector<double> a;  // row-major n*n
    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

/// M[i][i] = alpha*d(i); M[i][j] = 1-alpha for edges, 0 otherwise.
DenseMatrix build_alpha_matrix(const Graph& g, AlphaParam a);

struct SpectralResult {
    double alpha = 0.0;
    double rho = 0.0;
    std::vector<double> perron;  // unit Euclidean norm, entrywise positive
    double residual = 0.0;       // max-norm of A_alpha x - rho x
    long iterations = 0;
    bool converged = false;
    // Collatz-Wielandt enclosure of rho from the final positive iterate.
    double cw_lower = 0.0;
    double cw_upper = 0.0;
};

struct SpectralOptions {
    double tolerance = 1e-12;
    long max_iterations = 1'000'000;
};

struct NonConvergenceError : std::runtime_error {
    NonConvergenceError(const std::string& what, SpectralResult best)
        : std::runtime_error(what), best(std::move(best)) {}
    SpectralResult best;
};

struct DisconnectedError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Dominant eigenpair of A_alpha(g) for connected g: power iteration on
/// A_alpha + I (the shift keeps the iteration primitive on bipartite graphs
/// at alpha = 0) with Rayleigh-quotient readout, shift subtracted from the
/// reported rho. Converged when the eigen-equation residual is <= tolerance.
SpectralResult spectral_radius(const Graph& g, AlphaParam a, const SpectralOptions& opt = {});

/// Independent cross-check, n <= 12: Householder tridiagonalization followed
/// by Sturm-count bisection for the largest eigenvalue. No power iteration
/// machinery is shared with spectral_radius.
double spectral_radius_oracle(const Graph& g, AlphaParam a);

/// (alpha * sum d(v) x_v^2 + 2(1-alpha) * sum_{uv in E} x_u x_v) / ||x||^2.
double rayleigh_quotient(const Graph& g, AlphaParam a, std::span<const double> x);

/// max over v of |alpha d(v) x_v + (1-alpha) sum_{w~v} x_w - rho x_v|.
double eigen_residual(const Graph& g, AlphaParam a, std::span<const double> x, double rho);

}  // namespace alphaspectra
