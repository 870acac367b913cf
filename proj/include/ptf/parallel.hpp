#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ptf {

// Worker count for the sweep kernels. 0 = use all hardware threads,
// 1 = serial reference path (no OpenMP region at all).
void set_jobs(int jobs);
int jobs();

namespace detail {
int effective_threads();
}

// Data-parallel loop over [0, count). Iterations must be independent;
// each writes only to its own output slot. With jobs() == 1 this is a
// plain serial loop, which the tests use as the reference path.
template <typename F>
void parallel_for(std::size_t count, F&& body) {
#ifdef _OPENMP
    const int nthreads = detail::effective_threads();
    if (nthreads != 1) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads)
        for (long long i = 0; i < static_cast<long long>(count); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < count; ++i) body(i);
}

}  // namespace ptf
