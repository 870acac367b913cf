#include "ptf/lp.hpp"

#include <cstddef>
#include <stdexcept>

namespace ptf::lp {

// Solves: exists lambda >= 0 with sum_j lambda_j * generators[j] = target.
// Phase-1: minimize the sum of artificial slacks; feasible iff optimum 0.
bool in_cone(const RatMat& generators, const RatVec& target) {
    const std::size_t d = target.size();
    const std::size_t m = generators.size();
    if (m == 0) return is_zero_vec(target);

    // columns: m lambdas, d artificials, 1 rhs
    const std::size_t cols = m + d + 1;
    RatMat tab(d, RatVec(cols, Rat(0)));
    for (std::size_t i = 0; i < d; ++i) {
        const bool flip = target[i] < 0;
        for (std::size_t j = 0; j < m; ++j)
            tab[i][j] = flip ? Rat(-generators[j][i]) : generators[j][i];
        tab[i][m + i] = 1;
        tab[i][cols - 1] = flip ? Rat(-target[i]) : target[i];
    }
    std::vector<std::size_t> basis(d);
    for (std::size_t i = 0; i < d; ++i) basis[i] = m + i;

    auto cost = [&](std::size_t col) { return col >= m ? Rat(1) : Rat(0); };

    while (true) {
        // reduced costs; entering column by Bland's rule
        std::size_t enter = cols;  // sentinel
        for (std::size_t j = 0; j + 1 < cols && enter == cols; ++j) {
            Rat rc = cost(j);
            for (std::size_t i = 0; i < d; ++i) rc -= cost(basis[i]) * tab[i][j];
            if (rc < 0) enter = j;
        }
        if (enter == cols) break;  // optimal
        // ratio test, ties broken by smallest basis index
        std::size_t leave = d;
        Rat best;
        for (std::size_t i = 0; i < d; ++i) {
            if (tab[i][enter] <= 0) continue;
            const Rat ratio = tab[i][cols - 1] / tab[i][enter];
            if (leave == d || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == d) throw std::logic_error("phase-1 simplex cannot be unbounded");
        const Rat piv = tab[leave][enter];
        for (std::size_t j = 0; j < cols; ++j) tab[leave][j] /= piv;
        for (std::size_t i = 0; i < d; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            const Rat f = tab[i][enter];
            for (std::size_t j = 0; j < cols; ++j) tab[i][j] -= f * tab[leave][j];
        }
        basis[leave] = enter;
    }
    Rat objective = 0;
    for (std::size_t i = 0; i < d; ++i)
        if (basis[i] >= m) objective += tab[i][cols - 1];
    return objective == 0;
}

}  // namespace ptf::lp
