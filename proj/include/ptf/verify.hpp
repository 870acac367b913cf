#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptf/io.hpp"

namespace ptf::verify {

struct Outcome {
    std::string name;
    bool pass = false;
    std::string detail;   // one-line summary
    io::json report;      // structured evidence
    double seconds = 0.0;
};

Outcome paper_table();                                   // example tables, exact strings
Outcome closed_forms(int max_n = 7);                     // rho/chi/phi specializations
Outcome typecone_oracle(int max_n = 5);                  // facet oracle vs characterization
Outcome rays_oracle(int max_n = 6);                      // ray oracle vs characterization
Outcome removahedral_sweep();                            // all essential congruences, n = 4
Outcome permutreehedron_fans(int max_n = 5);             // normal partition = classes
Outcome submodular_realizations(std::uint64_t seed);     // strict accepted, weak rejected
Outcome vh_agreement(int max_n = 5);                     // vertex formula vs removahedron
Outcome kinematic(std::uint64_t seed, int max_n = 5);    // vertex count + skeleton
Outcome pb_defect();                                     // zero-defect witness
Outcome braid_facets(int max_n = 5);                     // submodular cone facets

std::vector<Outcome> run_all(std::uint64_t seed);
const std::vector<std::string>& suite_names();
Outcome run_suite(const std::string& name, std::uint64_t seed);

}  // namespace ptf::verify
