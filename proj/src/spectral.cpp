#include "alphaspectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace alphaspectra {

DenseMatrix build_alpha_matrix(const Graph& g, AlphaParam a) {
    int n = g.n();
    DenseMatrix m{n, std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
    for (int v = 0; v < n; ++v) {
        m.at(v, v) = a.value * g.degree(v);
        for (int w : g.neighbors(v)) m.at(v, w) = 1.0 - a.value;
    }
    return m;
}

namespace {

// y = (A_alpha + I) x, straight off the adjacency lists.
void shifted_matvec(const Graph& g, double alpha, const std::vector<double>& x,
                    std::vector<double>& y) {
    int n = g.n();
    for (int v = 0; v < n; ++v) {
        double acc = (alpha * g.degree(v) + 1.0) * x[v];
        double nb = 0.0;
        for (int w : g.neighbors(v)) nb += x[w];
        y[v] = acc + (1.0 - alpha) * nb;
    }
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, AlphaParam a, const SpectralOptions& opt) {
    int n = g.n();
    if (n == 0) throw std::invalid_argument("spectral_radius: empty graph");
    if (!g.is_connected()) throw DisconnectedError("spectral_radius: graph is disconnected");

    std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(n);

    SpectralResult result;
    result.alpha = a.value;
    double theta = 0.0;
    for (long it = 1; it <= opt.max_iterations; ++it) {
        shifted_matvec(g, a.value, x, y);
        theta = 0.0;
        for (int v = 0; v < n; ++v) theta += x[v] * y[v];  // Rayleigh, ||x|| = 1
        double res = 0.0;
        for (int v = 0; v < n; ++v) res = std::max(res, std::abs(y[v] - theta * x[v]));
        result.iterations = it;
        result.residual = res;
        if (res <= opt.tolerance) {
            result.converged = true;
            break;
        }
        double norm = 0.0;
        for (double t : y) norm += t * t;
        norm = std::sqrt(norm);
        for (int v = 0; v < n; ++v) x[v] = y[v] / norm;
    }

    result.rho = theta - 1.0;
    result.perron = x;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (int v = 0; v < n; ++v) {
        double ratio = y[v] / x[v];  // x stays strictly positive from the all-ones start
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }
    result.cw_lower = lo - 1.0;
    result.cw_upper = hi - 1.0;

    if (!result.converged)
        throw NonConvergenceError("spectral_radius: residual above tolerance at max iterations",
                                  result);
    return result;
}

// ---------------------------------------------------------------------------
// Dense oracle: Householder reduction to tridiagonal form, then bisection on
// Sturm sign counts for the largest eigenvalue.

namespace {

void householder_tridiag(DenseMatrix& m, std::vector<double>& diag, std::vector<double>& sub) {
    int n = m.n;
    diag.assign(n, 0.0);
    sub.assign(n, 0.0);
    for (int k = 0; k < n - 2; ++k) {
        double scale = 0.0;
        for (int i = k + 1; i < n; ++i) scale += std::abs(m.at(i, k));
        if (scale == 0.0) {
            sub[k + 1] = m.at(k + 1, k);
            continue;
        }
        double sigma = 0.0;
        std::vector<double> u(n, 0.0);
        for (int i = k + 1; i < n; ++i) {
            u[i] = m.at(i, k) / scale;
            sigma += u[i] * u[i];
        }
        double alpha = (u[k + 1] >= 0 ? -std::sqrt(sigma) : std::sqrt(sigma));
        double h = sigma - u[k + 1] * alpha;
        u[k + 1] -= alpha;
        // p = M u / h, K = u'p / (2h), q = p - K u ; M <- M - u q' - q u'
        std::vector<double> p(n, 0.0);
        for (int i = k + 1; i < n; ++i) {
            double s = 0.0;
            for (int j = k + 1; j < n; ++j) s += m.at(i, j) * u[j];
            p[i] = s / h;
        }
        double K = 0.0;
        for (int i = k + 1; i < n; ++i) K += u[i] * p[i];
        K /= 2.0 * h;
        for (int i = k + 1; i < n; ++i) {
            double q = p[i] - K * u[i];
            for (int j = k + 1; j < n; ++j) m.at(i, j) -= u[i] * (p[j] - K * u[j]) + q * u[j];
        }
        sub[k + 1] = alpha * scale;
    }
    if (n >= 2) sub[n - 1] = m.at(n - 1, n - 2);
    for (int i = 0; i < n; ++i) diag[i] = m.at(i, i);
}

// Number of eigenvalues of the tridiagonal matrix strictly below x.
int sturm_count(const std::vector<double>& diag, const std::vector<double>& sub, double x) {
    int n = static_cast<int>(diag.size());
    int count = 0;
    double q = 1.0;
    for (int i = 0; i < n; ++i) {
        double e2 = (i == 0) ? 0.0 : sub[i] * sub[i];
        q = diag[i] - x - (q != 0.0 ? e2 / q : e2 / 1e-300);
        if (q < 0.0) ++count;
        if (q == 0.0) q = -1e-300;
    }
    return count;
}

}  // namespace

double spectral_radius_oracle(const Graph& g, AlphaParam a) {
    int n = g.n();
    if (n == 0) throw std::invalid_argument("spectral_radius_oracle: empty graph");
    if (n > 12) throw std::invalid_argument("spectral_radius_oracle: n > 12 over budget");
    DenseMatrix m = build_alpha_matrix(g, a);
    std::vector<double> diag, sub;
    householder_tridiag(m, diag, sub);
    double lo = diag[0], hi = diag[0];
    for (int i = 0; i < n; ++i) {
        double r = std::abs(sub[i]) + (i + 1 < n ? std::abs(sub[i + 1]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    hi += 1e-9;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++it) {
        double mid = lo + (hi - lo) / 2;
        if (sturm_count(diag, sub, mid) == n)
            hi = mid;
        else
            lo = mid;
    }
    return lo + (hi - lo) / 2;
}

double rayleigh_quotient(const Graph& g, AlphaParam a, std::span<const double> x) {
    int n = g.n();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("rayleigh_quotient: vector size mismatch");
    double norm2 = 0.0;
    for (double t : x) norm2 += t * t;
    if (norm2 == 0.0) throw std::invalid_argument("rayleigh_quotient: zero vector");
    double quad = 0.0;
    for (int v = 0; v < n; ++v) {
        quad += a.value * g.degree(v) * x[v] * x[v];
        for (int w : g.neighbors(v))
            if (v < w) quad += 2.0 * (1.0 - a.value) * x[v] * x[w];
    }
    return quad / norm2;
}

double eigen_residual(const Graph& g, AlphaParam a, std::span<const double> x, double rho) {
    int n = g.n();
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument("eigen_residual: vector size mismatch");
    double norm2 = 0.0;
    for (double t : x) norm2 += t * t;
    if (norm2 == 0.0) throw std::invalid_argument("eigen_residual: zero vector");
    double worst = 0.0;
    for (int v = 0; v < n; ++v) {
        double acc = a.value * g.degree(v) * x[v] - rho * x[v];
        for (int w : g.neighbors(v)) acc += (1.0 - a.value) * x[w];
        worst = std::max(worst, std::abs(acc));
    }
    return worst;
}

}  // namespace alphaspectra
