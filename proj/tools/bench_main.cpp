// Compares the OpenMP kernels against their serial reference paths.

#include <chrono>
#include <iomanip>
#include <iostream>

#include "ptf/parallel.hpp"
#include "ptf/realizations.hpp"
#include "ptf/typecone.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const std::string& name, double serial, double parallel, bool equal) {
    std::cout << std::left << std::setw(34) << name << std::right << std::fixed
              << std::setprecision(3) << std::setw(10) << serial << " s" << std::setw(10)
              << parallel << " s" << std::setw(9) << std::setprecision(2)
              << (parallel > 0 ? serial / parallel : 0.0) << "x   "
              << (equal ? "results equal" : "RESULTS DIFFER") << "\n";
}

void bench_vertex_enumeration(int n) {
    const ptf::HPolytope perm = ptf::removahedron(n, ptf::proper_subsets(n));
    const auto t0 = std::chrono::steady_clock::now();
    const ptf::VertexResult serial = ptf::vertices_serial(perm);
    const double ts = seconds_since(t0);
    ptf::set_jobs(0);
    const auto t1 = std::chrono::steady_clock::now();
    const ptf::VertexResult parallel = ptf::vertices(perm);
    const double tp = seconds_since(t1);
    row("vertex enumeration Perm(" + std::to_string(n) + ")", ts, tp,
        serial.poly == parallel.poly);
}

void bench_facet_oracle(const std::string& letters) {
    const ptf::Decoration d(letters);
    ptf::set_jobs(1);
    const auto t0 = std::chrono::steady_clock::now();
    const auto serial = ptf::facet_oracle(d);
    const double ts = seconds_since(t0);
    ptf::set_jobs(0);
    const auto t1 = std::chrono::steady_clock::now();
    const auto parallel = ptf::facet_oracle(d);
    const double tp = seconds_since(t1);
    row("type cone facet oracle " + letters, ts, tp, serial == parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP enabled, max threads " << omp_get_max_threads() << "\n\n";
#else
    std::cout << "built without OpenMP; both columns run serially\n\n";
#endif
    std::cout << std::left << std::setw(34) << "kernel" << std::right << std::setw(12) << "serial"
              << std::setw(12) << "parallel" << std::setw(10) << "speedup" << "\n";
    bench_vertex_enumeration(4);
    bench_vertex_enumeration(5);
    bench_facet_oracle("ooooo");
    bench_facet_oracle("odudo");
    return 0;
}
