#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "ptf/congruence.hpp"
#include "ptf/decoration.hpp"
#include "ptf/permutree.hpp"
#include "ptf/polytope.hpp"

namespace ptf::io {

using json = nlohmann::ordered_json;

json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

json to_json(const Subset& s);
Subset subset_from_json(const json& j, int n);

json to_json(const Shard& s);
Shard shard_from_json(const json& j, int n);

json to_json(const ShardIdeal& ideal);
ShardIdeal ideal_from_json(const json& j);  // validates upward closure

json to_json(const Permutree& t);
Permutree permutree_from_json(const json& j, const Decoration& d);  // validates

json to_json(const HPolytope& p);
HPolytope hpolytope_from_json(const json& j);

json to_json(const VPolytope& p, int n);
VPolytope vpolytope_from_json(const json& j);

// decoration,rho,chi,phi,simplicial rows over all decorations of size n.
std::string counts_csv(int n);

// Object File Format for polytopes of dimension <= 3. Ambient n <= 4; the
// last coordinate is dropped (affine on the hyperplane) and short vectors
// are padded with zeros. Coordinates print as exact decimals when the
// denominators divide a power of ten; otherwise they are rounded and the
// file carries a "display_only: true" comment.
std::string to_off(const VPolytope& vp, const HPolytope& facets_of);

}  // namespace ptf::io
