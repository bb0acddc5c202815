// Benchmark: batch rho_alpha evaluation over an enumeration corpus, serial
// reference vs the OpenMP kernel, with a bitwise identity check.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "alphaspectra/enumeration.hpp"
#include "alphaspectra/parallel.hpp"
#include "alphaspectra/spectral.hpp"
#include "alphaspectra/verify.hpp"

namespace as = alphaspectra;

int main(int argc, char** argv) {
    int n = 6;
    double alpha = 0.5;
    int jobs = 0;
    int repeat = 3;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--n") && i + 1 < argc) n = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--alpha") && i + 1 < argc) alpha = std::atof(argv[++i]);
        else if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) jobs = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--repeat") && i + 1 < argc) repeat = std::atoi(argv[++i]);
        else {
            std::fprintf(stderr, "usage: bench_spectra [--n N] [--alpha A] [--jobs J] [--repeat R]\n");
            return 2;
        }
    }

    const std::vector<as::Graph>& corpus = as::cached_connected_graphs(n);
    as::AlphaParam a(alpha);
    auto eval = [&](std::size_t i) { return as::eval_rho(corpus[i], a).rho; };

    using clock = std::chrono::steady_clock;
    auto time_ms = [&](auto&& fn) {
        auto t0 = clock::now();
        fn();
        return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
    };

    std::printf("corpus: %zu connected graphs on %d vertices, alpha=%g, repeat=%d\n", corpus.size(),
                n, alpha, repeat);
    std::vector<double> serial, parallel;
    double best_serial = 1e300, best_parallel = 1e300;
    for (int r = 0; r < repeat; ++r) {
        double t = time_ms([&] { serial = as::serial_map<double>(corpus.size(), eval); });
        best_serial = std::min(best_serial, t);
        std::printf("  serial   run %d: %9.2f ms\n", r + 1, t);
    }
    for (int r = 0; r < repeat; ++r) {
        double t = time_ms([&] { parallel = as::parallel_map<double>(corpus.size(), eval, jobs); });
        best_parallel = std::min(best_parallel, t);
        std::printf("  parallel run %d: %9.2f ms\n", r + 1, t);
    }

    bool identical = serial == parallel;  // bitwise, element by element
    std::printf("best serial %.2f ms, best parallel %.2f ms, speedup %.2fx, results %s\n",
                best_serial, best_parallel, best_serial / best_parallel,
                identical ? "bitwise identical" : "DIFFER");
    return identical ? 0 : 1;
}
