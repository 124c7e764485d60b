#include "secst/parallel.hpp"

#include <cstdlib>
#include <string>
#include <thread>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace secst {

namespace {

int read_thread_cap() {
#if defined(_OPENMP)
    int n = omp_get_max_threads();
#else
    int n = static_cast<int>(std::thread::hardware_concurrency());
#endif
    if (n < 1) n = 1;
    if (const char* env = std::getenv("SECST_THREADS")) {
        try {
            const int cap = std::stoi(env);
            if (cap >= 1 && cap < n) n = cap;
        } catch (...) {
            // unparsable value: keep the hardware default
        }
    }
    return n;
}

}

int max_threads() {
    static const int cached = read_thread_cap();
    return cached;
}

}
