#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ptf/subset.hpp"

namespace ptf {

// Shard sigma(i, j, S): the piece of the hyperplane x_i = x_j where the
// coordinates indexed by S lie below x_i and the rest of ]i,j[ lie above.
struct Shard {
    int i = 0;
    int j = 0;
    std::uint32_t s = 0;  // subset of ]i,j[, bit v-1 for value v
    int n = 0;

    Shard() = default;
    Shard(int i_, int j_, std::uint32_t s_, int n_) : i(i_), j(j_), s(s_), n(n_) {}
    static Shard of(int i, int j, std::initializer_list<int> s_vals, int n) {
        std::uint32_t s = 0;
        for (int v : s_vals) s |= 1u << (v - 1);
        return Shard(i, j, s, n);
    }

    int length() const { return j - i; }
    std::uint32_t open_interval_bits() const {
        return (((1u << (j - 1)) - 1u) ^ ((1u << i) - 1u));  // values i+1 .. j-1
    }
    bool is_up() const { return s == open_interval_bits(); }
    bool is_down() const { return s == 0; }
    bool is_mixed() const { return !is_up() && !is_down(); }
    bool is_basic() const { return length() == 1; }

    Subset s_as_subset() const { return Subset(s, n); }

    bool operator==(const Shard& o) const { return i == o.i && j == o.j && s == o.s; }
    bool operator!=(const Shard& o) const { return !(*this == o); }
    bool operator<(const Shard& o) const {
        if (i != o.i) return i < o.i;
        if (j != o.j) return j < o.j;
        return s < o.s;
    }

    std::string label() const;  // "S(1,4,{2})"
};

// Forcing: a = sigma(i,j,S) forces b = sigma(h,k,T) when h <= i < j <= k
// and S = T restricted to ]i,j[. Shorter shards force longer ones.
bool forces(const Shard& a, const Shard& b);

// All 2^(j-i-1) choices of S over all 1 <= i < j <= n, sorted.
std::vector<Shard> shard_poset(int n);

// Three-line text arc diagram: '*' endpoints, 'o' dots, '-' above the dots
// of S on the first line and below the remaining dots of ]i,j[ on the third.
std::string arc_diagram(const Shard& sh);

}  // namespace ptf
