#include "ptf/parallel.hpp"

#include <atomic>

namespace ptf {

namespace {
std::atomic<int> g_jobs{0};
}

void set_jobs(int jobs) { g_jobs.store(jobs < 0 ? 0 : jobs); }
int jobs() { return g_jobs.load(); }

namespace detail {
int effective_threads() {
    int j = g_jobs.load();
#ifdef _OPENMP
    if (j == 0) j = omp_get_max_threads();
#else
    if (j == 0) j = 1;
#endif
    return j;
}
}  // namespace detail

}  // namespace ptf
