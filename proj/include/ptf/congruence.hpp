#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "ptf/decoration.hpp"
#include "ptf/permutation.hpp"
#include "ptf/shard.hpp"

namespace ptf {

// Upper ideal of the shard poset: closed under adding any shard that forces
// a member. Basic shards sigma(i, i+1, {}) are maximal for this orientation.
struct ShardIdeal {
    int n = 0;
    std::vector<Shard> shards;  // sorted, unique

    bool contains(const Shard& s) const;
    bool essential() const;  // contains all basic shards
    ShardIdeal antipodal() const;

    bool operator==(const ShardIdeal& o) const { return n == o.n && shards == o.shards; }
};

struct NotUpwardClosed {
    Shard member;   // shard in the set
    Shard missing;  // forces `member` but is absent
};

// Checks upward closure under forcing. The witness names a member together
// with a missing shard forcing it.
std::variant<ShardIdeal, NotUpwardClosed> validate_ideal(int n, std::vector<Shard> shards);

// Partition of all n! permutations, indexed by lexicographic rank.
struct Partition {
    int num_classes = 0;
    std::vector<int> class_of;

    void canonicalize();  // renumber classes by first occurrence
    std::vector<std::vector<std::size_t>> classes() const;
    bool refines(const Partition& coarser) const;
    bool operator==(const Partition& o) const {
        return num_classes == o.num_classes && class_of == o.class_of;
    }
    bool operator!=(const Partition& o) const { return !(*this == o); }
};

struct Congruence {
    ShardIdeal ideal;
    Partition classes;
    bool essential = false;
};

// Two adjacent permutations land in the same class exactly when the shard of
// their common wall is absent from the ideal; classes are the connected
// components of the remaining adjacency graph.
Congruence congruence_classes(const ShardIdeal& ideal, const PermTable& table);

// Independent route for permutree congruences: transitive closure of the
// rewriting rules  U ik V j W ~ U ki V j W  (j in delta^-)  and
// U j V ik W ~ U j V ki W  (j in delta^+),  i < j < k.
Partition rewriting_classes(const Decoration& d, const PermTable& table);

// Shard ideal of the permutree congruence: arcs avoiding below delta^- and
// above delta^+.
ShardIdeal permutree_ideal(const Decoration& d);

struct NotPermutree {
    Shard witness;  // a generator of the complementary lower ideal of length != 2
};

// Decodes the decoration from the minimal generators of the complementary
// lower ideal when they all have length 2; boundary letters normalize to 'o'.
std::variant<Decoration, NotPermutree> ideal_decoration(const ShardIdeal& ideal);

// All upper ideals of the shard poset (desk scale: n <= 4 has 11 shards).
std::vector<ShardIdeal> enumerate_upper_ideals(int n);

// The n-2 shards containing the braid ray of I in their relative interior:
// down shards joining consecutive members of I, up shards joining
// consecutive members of the complement.
std::vector<Shard> shards_through_ray(const Subset& I);

// Rays of the quotient fan: proper I whose shards_through_ray all survive.
std::vector<Subset> quotient_fan_rays(const ShardIdeal& ideal);

// Quotient of the weak order: X <= Y iff some x in X is weak-below some y
// in Y. Returned as a reachability matrix over class ids.
std::vector<std::vector<bool>> quotient_order(const Partition& classes, const PermTable& table);

// Every pair must have a unique least upper bound and greatest lower bound.
bool is_lattice(const std::vector<std::vector<bool>>& leq);

}  // namespace ptf
