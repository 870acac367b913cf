#pragma once

#include "ptf/rational.hpp"

namespace ptf::lp {

// Exact conic membership: does target lie in the nonnegative span of the
// generator rows? Phase-1 simplex with Bland's rule, all arithmetic in Rat.
bool in_cone(const RatMat& generators, const RatVec& target);

}  // namespace ptf::lp
