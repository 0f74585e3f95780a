#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fockseq {

// Data-parallel index loop.  Every call site in this library writes to
// disjoint slots, so results are bit-identical for any thread count.
template <typename F>
void parallel_for(std::ptrdiff_t count, F &&fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) fn(i);
#else
    for (std::ptrdiff_t i = 0; i < count; ++i) fn(i);
#endif
}

// Serial reference loop, kept alongside the parallel one for testing and
// benchmarking.
template <typename F>
void serial_for(std::ptrdiff_t count, F &&fn) {
    for (std::ptrdiff_t i = 0; i < count; ++i) fn(i);
}

inline int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace fockseq
