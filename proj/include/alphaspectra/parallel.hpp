#pragma once

#include <cstddef>
#include <exception>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace alphaspectra {

/// Serial reference for parallel_map. Kept as a separate code path so tests
/// and the benchmark can compare the two directly.
template <class R, class F>
std::vector<R> serial_map(std::size_t count, F&& f) {
    std::vector<R> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
}

/// Evaluate f(0..count-1) into a result vector. Each slot is written by
/// exactly one iteration, so results are identical for every job count.
/// jobs == 1 selects the serial reference path; jobs == 0 uses all available
/// threads. Exceptions are captured per slot and the lowest-index one is
/// rethrown after the loop, matching serial behavior.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, F&& f, int jobs = 0) {
    if (jobs == 1) return serial_map<R>(count, std::forward<F>(f));
    std::vector<R> out(count);
    std::vector<std::exception_ptr> errors(count);
#ifdef _OPENMP
    int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
        try {
            out[i] = f(static_cast<std::size_t>(i));
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
#else
    for (std::size_t i = 0; i < count; ++i) {
        try {
            out[i] = f(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
#endif
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace alphaspectra
