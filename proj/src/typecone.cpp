#include "ptf/typecone.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ptf/lp.hpp"
#include "ptf/parallel.hpp"
#include "ptf/rational.hpp"

namespace ptf {

std::vector<Subset> permutree_rays(const Decoration& d) {
    const int n = d.n();
    const std::uint32_t minus = d.minus_set().bits, plus = d.plus_set().bits;
    std::vector<Subset> rays;
    for (const Subset& I : proper_subsets(n)) {
        bool ok = true;
        for (int b = 2; b < n && ok; ++b) {
            const std::uint32_t below = I.bits & ((1u << (b - 1)) - 1u);
            const std::uint32_t above = I.bits >> b;
            const bool bit = I.contains(b);
            // some a < b < c with a, c in I
            if (!bit && ((minus >> (b - 1)) & 1u) && below != 0 && above != 0) ok = false;
            // some a < b < c with a, c outside I
            const std::uint32_t cbelow = ~I.bits & ((1u << (b - 1)) - 1u);
            const std::uint32_t cabove = (~I.bits & ((1u << n) - 1u)) >> b;
            if (bit && ((plus >> (b - 1)) & 1u) && cbelow != 0 && cabove != 0) ok = false;
        }
        if (ok) rays.push_back(I);
    }
    return rays;
}

long omega(const std::string& prefix) {
    long w = 1;
    for (char c : prefix) {
        switch (c) {
            case 'o': w *= 2; break;
            case 'd':
            case 'u': w += 1; break;
            case 'x': w = 2; break;
            default: throw std::invalid_argument("bad decoration letter");
        }
    }
    return w;
}

namespace {

bool no_updown_between(const Decoration& d, int i, int j) {
    for (int k = i + 1; k < j; ++k)
        if (d.at(k) == 'x') return false;
    return true;
}

int none_between(const Decoration& d, int i, int j) {
    int c = 0;
    for (int k = i + 1; k < j; ++k)
        if (d.at(k) == 'o') ++c;
    return c;
}

long omega_prefix(const Decoration& d, int i) {  // Omega(d_1 .. d_{i-1})
    return omega(d.letters.substr(0, i - 1));
}

long omega_suffix(const Decoration& d, int j) {  // Omega(d_n .. d_{j+1})
    std::string rev(d.letters.begin() + j, d.letters.end());
    std::reverse(rev.begin(), rev.end());
    return omega(rev);
}

}  // namespace

long rho(const Decoration& d) {
    const int n = d.n();
    long total = n - 1;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (no_updown_between(d, i, j)) total += 1L << none_between(d, i, j);
    return total;
}

long chi(const Decoration& d) {
    const int n = d.n();
    long total = 0;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (!no_updown_between(d, i, j)) continue;
            const long left = d.at(i) != 'x' ? omega_prefix(d, i) : 1;
            const long right = d.at(j) != 'x' ? omega_suffix(d, j) : 1;
            total += left * (1L << none_between(d, i, j)) * right;
        }
    return total;
}

long phi(const Decoration& d) {
    const int n = d.n();
    long total = 0;
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (!no_updown_between(d, i, j)) continue;
            const long left = d.at(i) == 'o' ? omega_prefix(d, i) : 1;
            const long right = d.at(j) == 'o' ? omega_suffix(d, j) : 1;
            total += left * (1L << none_between(d, i, j)) * right;
        }
    return total;
}

namespace {

// Conditions (i) and (iii) shared by exchangeable pairs and facet pairs;
// strict is false for the exchangeable version (decorated letter suffices)
// and true for the facet version (updown required).
bool pair_conditions(const Decoration& d, const Subset& I, const Subset& J, bool strict) {
    const Subset IJ = I.set_difference(J), JI = J.set_difference(I);
    if (IJ.is_empty() || JI.is_empty()) return false;
    int i = IJ.max(), j = JI.min();
    const Subset *pI = &I, *pJ = &J;
    if (!(i < j)) {
        i = JI.max();
        j = IJ.min();
        if (!(i < j)) return false;
        pI = &J;
        pJ = &I;
    }
    const Subset dI = pI->set_difference(*pJ), dJ = pJ->set_difference(*pI);
    const char ci = d.at(i), cj = d.at(j);
    if (strict) {
        if (!(dI.size() == 1 || ci == 'x')) return false;
        if (!(dJ.size() == 1 || cj == 'x')) return false;
    } else {
        if (!(dI.size() == 1 || ci != 'o')) return false;
        if (!(dJ.size() == 1 || cj != 'o')) return false;
    }
    const Subset inter = pI->set_intersection(*pJ);
    for (int k = i + 1; k < j; ++k) {
        if (d.in_minus(k) && !inter.contains(k)) return false;
        if (d.in_plus(k) && inter.contains(k)) return false;
    }
    return true;
}

ExchangeablePair oriented(const Subset& I, const Subset& J) {
    const int i = I.set_difference(J).max(), j = J.set_difference(I).min();
    if (i < j) return {I, J};
    return {J, I};
}

std::vector<ExchangeablePair> collect_pairs(const Decoration& d, bool strict) {
    const std::vector<Subset> rays = permutree_rays(d);
    std::vector<ExchangeablePair> out;
    for (std::size_t a = 0; a < rays.size(); ++a)
        for (std::size_t b = a + 1; b < rays.size(); ++b)
            if (pair_conditions(d, rays[a], rays[b], strict))
                out.push_back(oriented(rays[a], rays[b]));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<ExchangeablePair> exchangeable_pairs(const Decoration& d) {
    return collect_pairs(d, false);
}

std::vector<ExchangeablePair> typecone_facets(const Decoration& d) {
    return collect_pairs(d, true);
}

bool is_simplicial(const Decoration& d) {
    for (int k = 2; k < d.n(); ++k)
        if (d.at(k) == 'o') return false;
    return true;
}

std::vector<std::size_t> irredundant_height_inequalities(
    const std::vector<Subset>& rays, const std::vector<ExchangeablePair>& pairs) {
    std::map<std::uint32_t, std::size_t> ray_index;
    for (std::size_t k = 0; k < rays.size(); ++k) ray_index[rays[k].bits] = k;
    const std::size_t N = rays.size();
    RatMat normals;
    for (const ExchangeablePair& p : pairs) {
        RatVec v(N, Rat(0));
        v[ray_index.at(p.I.bits)] += 1;
        v[ray_index.at(p.J.bits)] += 1;
        const Subset inter = p.I.set_intersection(p.J);
        const Subset uni = p.I.set_union(p.J);
        if (!inter.is_empty()) v[ray_index.at(inter.bits)] -= 1;
        if (!uni.is_full()) v[ray_index.at(uni.bits)] -= 1;
        normals.push_back(std::move(v));
    }
    for (std::size_t a = 0; a < normals.size(); ++a)
        for (std::size_t b = a + 1; b < normals.size(); ++b)
            if (normals[a] == normals[b])
                throw std::logic_error("distinct pairs yielded equal normals");
    std::vector<char> facet(normals.size(), 0);
    parallel_for(normals.size(), [&](std::size_t p) {
        RatMat others;
        others.reserve(normals.size() - 1);
        for (std::size_t q = 0; q < normals.size(); ++q)
            if (q != p) others.push_back(normals[q]);
        facet[p] = lp::in_cone(others, normals[p]) ? 0 : 1;
    });
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < normals.size(); ++p)
        if (facet[p]) out.push_back(p);
    return out;
}

std::vector<ExchangeablePair> facet_oracle(const Decoration& d) {
    const std::vector<Subset> rays = permutree_rays(d);
    const std::vector<ExchangeablePair> pairs = exchangeable_pairs(d);
    std::vector<ExchangeablePair> out;
    for (std::size_t idx : irredundant_height_inequalities(rays, pairs)) out.push_back(pairs[idx]);
    return out;
}

std::vector<Subset> canonical_ray_order(std::vector<Subset> rays) {
    std::sort(rays.begin(), rays.end(), size_lex_less);
    return rays;
}

}  // namespace ptf
