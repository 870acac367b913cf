// Acceptance suite: one line per criterion, exit 1 on any failure.

#include <cstdio>
#include <cstdlib>
#include <string>

#include "ptf/verify.hpp"

int main(int argc, char** argv) {
    std::uint64_t seed = 0;
    if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
    const std::vector<ptf::verify::Outcome> outcomes = ptf::verify::run_all(seed);
    bool all_pass = true;
    int criterion = 0;
    for (const ptf::verify::Outcome& o : outcomes) {
        ++criterion;
        all_pass = all_pass && o.pass;
        std::printf("[%s] criterion %02d %-16s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", criterion,
                    o.name.c_str(), o.detail.c_str(), o.seconds);
        std::fflush(stdout);
    }
    std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria passed"
                                 : "ACCEPTANCE: at least one criterion failed");
    return all_pass ? 0 : 1;
}
