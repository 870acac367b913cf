#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptf/shard.hpp"
#include "ptf/subset.hpp"

namespace ptf {

// Permutation of [n] in one-line notation, 1-indexed values.
// Positions and values are kept distinct throughout: word[k-1] is the value
// at position k.
struct Permutation {
    std::vector<int> word;

    Permutation() = default;
    explicit Permutation(std::vector<int> w);

    int n() const { return static_cast<int>(word.size()); }
    int at(int pos) const { return word[pos - 1]; }

    static Permutation identity(int n);
    static Permutation from_string(const std::string& digits);  // "2413"

    // Swap the entries at positions k and k+1.
    Permutation adjacent_swap(int k) const;

    // Word reversal; the chamber map of the antipodal involution x -> -x.
    Permutation reversed() const;

    std::string str() const;

    bool operator==(const Permutation& o) const { return word == o.word; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return word < o.word; }
};

// Inversions as ordered value pairs (b, a) with a < b, b before a in the word.
std::vector<std::pair<int, int>> inversion_set(const Permutation& p);

// Bit mask over value pairs {a < b}: bit index pair_index(a, b, n).
int pair_index(int a, int b, int n);
std::uint64_t inversion_bits(const Permutation& p);

// Weak order: p <= q iff inv(p) is a subset of inv(q).
bool weak_leq(const Permutation& p, const Permutation& q);

// The shard separating the chambers C(p) and C(p with positions k, k+1
// swapped): with a = min, b = max of the two values, S collects the values
// strictly between a and b placed before position k.
Shard cover_shard(const Permutation& p, int k);

// The n-1 proper prefixes {p_1, .., p_k}; these span the chamber C(p).
std::vector<Subset> chamber_rays(const Permutation& p);

// Linear direction (-n+1, -n+3, .., n-1) orienting Hasse diagrams.
std::vector<long> direction_alpha(int n);

// All permutations of [n] in lexicographic order, with rank lookup.
class PermTable {
  public:
    explicit PermTable(int n);
    int n() const { return n_; }
    std::size_t size() const { return perms_.size(); }
    const Permutation& operator[](std::size_t idx) const { return perms_[idx]; }
    const std::vector<Permutation>& all() const& { return perms_; }
    std::vector<Permutation> all() && { return std::move(perms_); }  // keeps temporaries safe
    std::size_t index_of(const Permutation& p) const;  // Lehmer rank

  private:
    int n_;
    std::vector<Permutation> perms_;
};

}  // namespace ptf
