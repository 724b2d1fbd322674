#ifndef WALKSIM_PARALLEL_HPP_
#define WALKSIM_PARALLEL_HPP_

#include <cstdint>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace walksim {

// Serial reference loop. Kept separate so tests and the benchmark can compare
// it against the OpenMP path; both must produce identical results because all
// per-index state (RNG streams, output slots) is keyed by the index.
template <class Fn>
void serial_for(std::int64_t count, Fn&& fn) {
    for (std::int64_t i = 0; i < count; ++i) fn(i);
}

// threads == 1 runs the serial reference; threads == 0 uses the OpenMP default.
template <class Fn>
void parallel_for(std::int64_t count, int threads, Fn&& fn) {
    if (threads == 1) {
        serial_for(count, std::forward<Fn>(fn));
        return;
    }
#ifdef _OPENMP
    if (threads > 0) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
        for (std::int64_t i = 0; i < count; ++i) fn(i);
    } else {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < count; ++i) fn(i);
    }
#else
    serial_for(count, std::forward<Fn>(fn));
#endif
}

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace walksim

#endif
