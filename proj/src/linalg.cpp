#include "ptf/linalg.hpp"

#include <cstddef>

namespace ptf {

std::vector<int> rref(RatMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rat inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b) {
    if (a.empty()) return std::nullopt;
    const std::size_t rows = a.size(), cols = a[0].size();
    RatMat aug(rows, RatVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    std::vector<int> pivots = rref(aug);
    // Inconsistent if a pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == static_cast<int>(cols)) return std::nullopt;
    if (pivots.size() != cols) return std::nullopt;
    RatVec x(cols);
    for (std::size_t i = 0; i < cols; ++i) x[i] = aug[i][cols];
    return x;
}

RatMat kernel_basis(const RatMat& a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    RatMat m = a;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    RatMat basis;
    for (std::size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        RatVec v(cols, Rat(0));
        v[free_c] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

int affine_dim(const std::vector<RatVec>& pts) {
    if (pts.empty()) return -1;
    RatMat diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RatVec d(pts[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = pts[i][j] - pts[0][j];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) return 0;
    return rank(std::move(diffs));
}

}  // namespace ptf
