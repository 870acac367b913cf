#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ptf/congruence.hpp"
#include "ptf/linalg.hpp"
#include "ptf/permutation.hpp"
#include "ptf/rational.hpp"
#include "ptf/subset.hpp"

namespace ptf {

// Representative ray vector r(I) = |I| * 1 - n * 1_I, with the convention
// r({}) = r([n]) = 0. Lives in the hyperplane sum x = 0.
RatVec ray_vector(const Subset& I);

// Basis of the left kernel of the given vectors (coefficients c with
// sum c_k v_k = 0).
RatMat linear_dependence(const std::vector<RatVec>& vectors);

// Half-space description restricted to the hyperplane sum x = sum_level.
// One inequality <r(I), x> <= h per proper subset, no duplicates.
struct HPolytope {
    int n = 0;
    Rat sum_level;
    std::vector<std::pair<Subset, Rat>> ineqs;  // sorted by subset bits

    void add(const Subset& I, const Rat& h);
    void finalize();  // sort, reject duplicates
};

struct VPolytope {
    std::vector<RatVec> vertices;  // sorted lexicographically
    bool operator==(const VPolytope& o) const { return vertices == o.vertices; }
};

struct VertexResult {
    bool bounded = false;
    VPolytope poly;
    RatVec recession_ray;  // witness when unbounded
};

// Exact vertex enumeration: solve every (n-1)-subset of tight inequalities
// inside the ambient hyperplane, keep feasible solutions. A nonzero
// recession ray is searched first and reported instead.
VertexResult vertices(const HPolytope& p);
VertexResult vertices_serial(const HPolytope& p);  // reference path

struct FacetResult {
    bool degenerate = false;  // polytope not full-dimensional in the hyperplane
    std::vector<std::size_t> facet_indices;
};

// Indices of inequalities tight on a facet, by exact rank of tight vertex sets.
FacetResult irredundant_facets(const HPolytope& p, const VPolytope& vp);

// For each permutation, the vertices maximizing every ray of its chamber.
// Exactly one maximizer means the chamber sits inside that vertex's normal
// cone; zero means the chamber is split, several mean degeneracy.
struct NormalPartition {
    std::vector<std::vector<int>> maximizers;  // indexed by permutation rank
    bool all_single() const;
    Partition induced() const;  // only meaningful when all_single()
};

NormalPartition normal_partition(const HPolytope& p, const VPolytope& vp, const PermTable& table);

// Height function h : 2^[n] -> Q with h({}) = h([n]) = 0, indexed by bits.
struct HeightFunction {
    int n = 0;
    std::vector<Rat> values;  // size 2^n

    explicit HeightFunction(int n_) : n(n_), values(1u << n_, Rat(0)) {}
    Rat& operator[](const Subset& I) { return values[I.bits]; }
    const Rat& operator[](const Subset& I) const { return values[I.bits]; }
};

enum class Submodularity { Strict, Weak, NotSubmodular };

struct SubmodularityResult {
    Submodularity kind = Submodularity::Strict;
    Subset I, J;  // witness pair: zero defect for Weak, negative for NotSubmodular
    Rat defect;
};

// Classification over all incomparable pairs I, J.
SubmodularityResult submodularity(const HeightFunction& h);

// Failure evidence for check_realizes.
struct RealizeWitness {
    enum class Kind {
        Unbounded,
        SplitChamber,
        DegenerateChamber,
        MismatchedClasses,
        WallCrossingViolated,
        EqualityViolated,
    };
    Kind kind = Kind::MismatchedClasses;
    std::size_t perm_a = 0, perm_b = 0;     // MismatchedClasses / SplitChamber
    std::vector<Subset> rays;               // dependence support
    RatVec coefficients;                    // aligned with rays
    Rat defect;                             // sum coeff * h(ray)
    std::string describe() const;
};

struct RealizeResult {
    bool ok = false;
    std::optional<RealizeWitness> witness;
};

// True iff the polytope with heights h over fan_rays has normal partition
// exactly fan_classes, every chamber landing on a single vertex. On failure
// the witness carries a violated wall-crossing or equality condition when
// one is found, otherwise a mismatched class pair.
RealizeResult check_realizes(const Partition& fan_classes, const std::vector<Subset>& fan_rays,
                             const HeightFunction& h, const PermTable& table,
                             const Rat& sum_level = Rat(0));

// Vertices of {z >= 0 : K z = u} by basic feasible solutions. Requires the
// simplicial count contract rows(K) = N - (n-1) and full row rank.
struct QPolytopeResult {
    bool ok = false;
    std::string error;
    VPolytope poly;  // points in R^N (coordinates aligned with ray order)
};

QPolytopeResult q_polytope(const std::vector<Subset>& rays, const RatMat& K, const RatVec& u);

}  // namespace ptf
