#pragma once

#include <optional>

#include "ptf/rational.hpp"

namespace ptf {

// Exact dense linear algebra over Rat, sized for desk-scale geometry
// (matrices of a few hundred rows, dimension <= ~30).

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(RatMat& m);

int rank(RatMat m);

// Unique solution of a*x = b, or nullopt when the system is singular or
// inconsistent (underdetermined counts as "no unique solution").
std::optional<RatVec> solve_unique(const RatMat& a, const RatVec& b);

// Basis of {x : a*x = 0}.
RatMat kernel_basis(const RatMat& a);

// Dimension of the affine hull of a point set (-1 for the empty set).
int affine_dim(const std::vector<RatVec>& pts);

}  // namespace ptf
