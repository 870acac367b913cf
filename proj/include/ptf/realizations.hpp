#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptf/congruence.hpp"
#include "ptf/decoration.hpp"
#include "ptf/permutree.hpp"
#include "ptf/polytope.hpp"
#include "ptf/typecone.hpp"

namespace ptf {

// Height of the permutahedron facet: h(I) = n |I| (n - |I|) / 2, zero on the
// boundary subsets. Always an integer.
Rat h_perm(const Subset& I);

HeightFunction permutahedron_heights(int n);

// Deleting inequalities from the permutahedron: keep <r(I), x> <= h(I)
// exactly for I in rays, on the hyperplane sum x = n(n+1)/2.
HPolytope removahedron(int n, const std::vector<Subset>& rays);

struct RemovahedralResult {
    bool removahedral = false;
    std::vector<Subset> fan_rays;
    RealizeResult realization;
};

// Builds the removahedron over the quotient-fan rays of an essential
// congruence and tests whether it realizes the quotient fan.
RemovahedralResult is_removahedral(const Congruence& c, const PermTable& table);

// Closed-form defect h(I)+h(J)-h(K)-h(L)-h(M) for the five interval families
// attached to an up-shard generator; cross-checked against h_perm directly.
Rat wall_crossing_defect(int n, int i, int j);

struct PermutreehedronResult {
    std::vector<Subset> rays;
    VPolytope v_form;      // vertex formula over all permutrees
    HPolytope h_form;      // removahedron over the fan rays
    VPolytope h_vertices;  // computed from h_form
    bool agree = false;    // identical vertex sets
};

PermutreehedronResult permutreehedron(const Decoration& d, const PermTable& table);

struct SubmodularRealization {
    bool accepted = false;  // false when h is not strictly submodular
    SubmodularityResult submodular;
    RealizeResult realization;  // only run when accepted
};

// Restricts a strictly submodular height function to the permutree fan rays
// and checks that the resulting polytope realizes the fan.
SubmodularRealization realize_from_submodular(const Decoration& d, const HeightFunction& h,
                                              const PermTable& table);

// Seeded height generators used by the verification sweeps and the CLI.
HeightFunction random_strictly_submodular(int n, std::uint64_t seed);
HeightFunction random_modular(int n, std::uint64_t seed);  // weakly, never strictly

// ---- kinematic realizations ---------------------------------------------

struct KinematicSystem {
    Decoration deco;
    std::vector<std::pair<int, int>> index_pairs;  // F_delta, sorted
    std::vector<Subset> variables;                 // reduced coordinates, proper subsets
    RatMat equalities;                             // |F_delta| x |variables|
};

// Bound p^eps_{i,j}: last initial-run position of the ray attached to (i,j).
// `eps` is +1 for delta^+ and -1 for delta^-. Arguments may step one outside
// [1, n] as the displayed equalities require.
int kinematic_p(const Decoration& d, int i, int j, int eps);
int kinematic_q(const Decoration& d, int i, int j, int eps);

// Reduced subset of a kinematic index (l, p, q, r); empty or full subsets
// mark pinned coordinates.
Subset kinematic_subset(const Decoration& d, const std::vector<std::pair<int, int>>& fd,
                        int l, int p, int q, int r);

// Coordinate space over {0,1} x [n]^2 x {0,1} with the published
// identifications, plus one four-term equality per pair of F_delta.
// Requires letters in {d, u, x} with updown ends.
KinematicSystem kinematic_system(const Decoration& d);

QPolytopeResult kinematic_polytope(const Decoration& d, const RatVec& u);

// Realization from the type cone facet normals; requires a simplicial type
// cone and |u| = phi(d).
QPolytopeResult simplicial_q_polytope(const Decoration& d, const RatVec& u);

// K matrix of simplicial_q_polytope, rows over typecone_facets(d), columns
// over canonical_ray_order(permutree_rays(d)).
RatMat typecone_facet_normals(const Decoration& d, const std::vector<Subset>& rays);

}  // namespace ptf
