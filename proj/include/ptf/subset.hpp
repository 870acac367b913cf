#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ptf {

// Subset of [n] = {1, .., n} as a bit vector; bit v-1 holds membership of v.
struct Subset {
    std::uint32_t bits = 0;
    int n = 0;

    Subset() = default;
    Subset(std::uint32_t bits_, int n_) : bits(bits_), n(n_) {}

    static Subset full(int n) { return Subset((1u << n) - 1u, n); }
    static Subset empty(int n) { return Subset(0, n); }
    static Subset of(std::initializer_list<int> vals, int n) {
        Subset s(0, n);
        for (int v : vals) s.bits |= 1u << (v - 1);
        return s;
    }
    static Subset interval(int a, int b, int n) {  // [a, b], empty if a > b
        Subset s(0, n);
        for (int v = a; v <= b; ++v) s.bits |= 1u << (v - 1);
        return s;
    }

    bool contains(int v) const { return (bits >> (v - 1)) & 1u; }
    int size() const { return std::popcount(bits); }
    bool is_empty() const { return bits == 0; }
    bool is_full() const { return bits == (1u << n) - 1u; }
    bool proper() const { return !is_empty() && !is_full(); }

    Subset set_union(const Subset& o) const { return Subset(bits | o.bits, n); }
    Subset set_intersection(const Subset& o) const { return Subset(bits & o.bits, n); }
    Subset set_difference(const Subset& o) const { return Subset(bits & ~o.bits, n); }
    Subset complement() const { return Subset(~bits & ((1u << n) - 1u), n); }
    bool subset_of(const Subset& o) const { return (bits & ~o.bits) == 0; }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int v = 1; v <= n; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    int min() const { return std::countr_zero(bits) + 1; }
    int max() const { return 32 - std::countl_zero(bits); }

    // "134" style label used in tables and canonical pair listings (n <= 9).
    std::string digits() const {
        std::string s;
        for (int v = 1; v <= n; ++v)
            if (contains(v)) s += static_cast<char>('0' + v);
        return s;
    }

    bool operator==(const Subset& o) const { return bits == o.bits && n == o.n; }
    bool operator!=(const Subset& o) const { return !(*this == o); }
};

// Canonical display order: by cardinality, then by smallest elements.
inline bool size_lex_less(const Subset& a, const Subset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.digits() < b.digits();
}

// Order used for deterministic containers.
inline bool operator<(const Subset& a, const Subset& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.bits < b.bits;
}

// All proper subsets of [n], in bit order.
inline std::vector<Subset> proper_subsets(int n) {
    std::vector<Subset> out;
    for (std::uint32_t m = 1; m + 1 < (1u << n); ++m) out.emplace_back(m, n);
    return out;
}

}  // namespace ptf
