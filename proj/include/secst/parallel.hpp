#ifndef SECST_PARALLEL_HPP
#define SECST_PARALLEL_HPP

#include <cstdint>

namespace secst {

/// Execution policy for the data-parallel kernels. Every kernel has a serial
/// reference path that produces bit-identical results to the OpenMP path;
/// tests compare the two and the benchmark tool times them.
enum class Exec { serial, parallel };

/// Thread budget for parallel kernels: hardware concurrency, capped by the
/// SECST_THREADS environment variable when set. Always >= 1.
int max_threads();

/// Runs body(i) for i in [0, n). Each index must write only its own output
/// slot so the result is independent of scheduling.
template <class F>
void parallel_for(std::int64_t n, F&& body, Exec exec = Exec::parallel) {
    if (exec == Exec::serial || n < 2) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 8) num_threads(max_threads())
    for (std::int64_t i = 0; i < n; ++i) body(i);
#else
    for (std::int64_t i = 0; i < n; ++i) body(i);
#endif
}

}

#endif
