#pragma once

#include <string>
#include <vector>

#include "ptf/decoration.hpp"
#include "ptf/subset.hpp"

namespace ptf {

// Exchangeable pair of fan rays, oriented so max(I \ J) < min(J \ I).
struct ExchangeablePair {
    Subset I, J;

    int i() const { return I.set_difference(J).max(); }
    int j() const { return J.set_difference(I).min(); }

    // "{12, 134}" with digit strings in lexicographic order
    std::string label() const {
        auto [a, b] = key();
        return "{" + a + ", " + b + "}";
    }
    std::pair<std::string, std::string> key() const {
        std::string a = I.digits(), b = J.digits();
        if (b < a) std::swap(a, b);
        return {a, b};
    }
    bool operator==(const ExchangeablePair& o) const { return I == o.I && J == o.J; }
    bool operator<(const ExchangeablePair& o) const { return key() < o.key(); }
};

// Rays of the permutree fan: proper I such that for a < b < c, membership of
// a and c forces b off delta^- \ I, and joint absence forces b off
// delta^+ intersect I.
std::vector<Subset> permutree_rays(const Decoration& d);

// Counting recursion: empty word 1; 'o' doubles, 'd'/'u' add one, 'x' resets to 2.
long omega(const std::string& prefix);

long rho(const Decoration& d);  // number of rays
long chi(const Decoration& d);  // number of exchangeable pairs
long phi(const Decoration& d);  // number of type cone facets

std::vector<ExchangeablePair> exchangeable_pairs(const Decoration& d);

// Exchangeable pairs whose wall-crossing inequality defines a facet of the
// type cone: the single-difference condition tightens from "decorated" to
// "updown".
std::vector<ExchangeablePair> typecone_facets(const Decoration& d);

// The type cone is simplicial exactly when no interior letter is 'o'.
bool is_simplicial(const Decoration& d);

// Independent irredundancy oracle over a cone of height vectors: which of
// the four-term inequalities h(I) + h(J) >= h(I and J) + h(I or J) are
// facet-defining. Decided by exact conic membership of each normal in the
// span of the others (the cone is full-dimensional, so irredundant equals
// facet-defining).
std::vector<std::size_t> irredundant_height_inequalities(
    const std::vector<Subset>& rays, const std::vector<ExchangeablePair>& pairs);

// Facet pairs of the type cone computed by the oracle, no combinatorial
// characterization involved.
std::vector<ExchangeablePair> facet_oracle(const Decoration& d);

// Canonical listing order for ray tables: by size, then lexicographically.
std::vector<Subset> canonical_ray_order(std::vector<Subset> rays);

}  // namespace ptf
