#include <doctest.h>

#include <map>
#include <set>

#include "ptf/permutree.hpp"
#include "ptf/typecone.hpp"

using namespace ptf;

namespace {

std::string ray_string(const Decoration& d) {
    std::string out;
    for (const Subset& I : canonical_ray_order(permutree_rays(d))) {
        if (!out.empty()) out += ", ";
        out += I.digits();
    }
    return out;
}

std::set<std::string> pair_labels(const std::vector<ExchangeablePair>& ps) {
    std::set<std::string> out;
    for (const ExchangeablePair& p : ps) out.insert(p.label());
    return out;
}

// Exchangeable pairs observed on actual rotations of enumerated permutrees.
std::set<std::string> pairs_by_rotation(const Decoration& d, const PermTable& table) {
    std::set<std::string> out;
    for (const Permutree& t : enumerate_permutrees(d, table).trees) {
        const std::vector<Subset> cuts_t = edge_cuts(t);
        for (const auto& [f, to] : t.edges) {
            const Permutree s = rotate(t, f, to);
            const Subset I = t.cut_of_edge(f, to);
            const Subset J = s.cut_of_edge(to, f);
            ExchangeablePair p{I, J};
            out.insert(p.label());
            // the intersection and union stay rays of the shared wall
            const std::vector<Subset> cuts_s = edge_cuts(s);
            for (const Subset& m : {I.set_intersection(J), I.set_union(J)}) {
                if (!m.proper()) continue;
                CHECK(std::binary_search(cuts_t.begin(), cuts_t.end(), m));
                CHECK(std::binary_search(cuts_s.begin(), cuts_s.end(), m));
            }
        }
    }
    return out;
}

}  // namespace

TEST_SUITE("typecone") {

TEST_CASE("rays of permutree fans") {
    CHECK(ray_string(Decoration("oodo")) == "1, 2, 3, 4, 12, 13, 23, 34, 123, 134, 234");
    CHECK(ray_string(Decoration("oxuo")) == "1, 4, 12, 34, 123, 124, 234");
    // down decorations: all proper intervals
    for (int n = 3; n <= 6; ++n) {
        std::set<std::string> intervals;
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j)
                if (Subset::interval(i, j, n).proper())
                    intervals.insert(Subset::interval(i, j, n).digits());
        std::set<std::string> got;
        for (const Subset& I : permutree_rays(Decoration(std::string(n, 'd'))))
            got.insert(I.digits());
        CHECK(got == intervals);
    }
}

TEST_CASE("omega recursion") {
    CHECK(omega("") == 1);
    CHECK(omega("o") == 2);
    CHECK(omega("od") == 3);
    CHECK(omega("ox") == 2);
    CHECK(omega("ood") == 5);
}

TEST_CASE("counting formulas on the paper examples") {
    CHECK(rho(Decoration("oodo")) == 11);
    CHECK(rho(Decoration("oxuo")) == 7);
    CHECK(chi(Decoration("oodo")) == 19);
    CHECK(chi(Decoration("oxuo")) == 6);
    CHECK(phi(Decoration("oodo")) == 12);
    CHECK(phi(Decoration("oxuo")) == 4);
    CHECK(rho(Decoration("o")) == 0);
    CHECK(rho(Decoration("dd")) == 2);
    CHECK(rho(Decoration("xo")) == 2);
}

TEST_CASE("exchangeable pairs") {
    CHECK(pair_labels(exchangeable_pairs(Decoration("oxuo"))) ==
          std::set<std::string>{"{1, 234}", "{12, 34}", "{12, 4}", "{123, 124}", "{123, 4}",
                                "{124, 34}"});
    const auto oodo = pair_labels(exchangeable_pairs(Decoration("oodo")));
    CHECK(oodo.size() == 19);
    CHECK(oodo.count("{12, 134}") == 1);
    CHECK(oodo.count("{13, 4}") == 1);

    // updown everywhere: initial versus final intervals only
    for (int n = 2; n <= 6; ++n) {
        std::set<std::string> expected;
        for (int i = 1; i < n; ++i)
            expected.insert(ExchangeablePair{Subset::interval(1, i, n),
                                             Subset::interval(i + 1, n, n)}
                                .label());
        CHECK(pair_labels(exchangeable_pairs(Decoration(std::string(n, 'x')))) == expected);
    }
}

TEST_CASE("type cone facet pairs") {
    CHECK(pair_labels(typecone_facets(Decoration("oxuo"))) ==
          std::set<std::string>{"{1, 234}", "{12, 4}", "{123, 124}", "{124, 34}"});
    const auto oodo = pair_labels(typecone_facets(Decoration("oodo")));
    CHECK(oodo.size() == 12);
    CHECK(oodo.count("{123, 134}") == 1);
    CHECK(oodo.count("{3, 4}") == 1);

    // down decorations: only the shifted interval pairs {[i,j[, ]i,j]}
    for (int n = 3; n <= 5; ++n) {
        std::set<std::string> expected;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j)
                expected.insert(ExchangeablePair{Subset::interval(i, j - 1, n),
                                                 Subset::interval(i + 1, j, n)}
                                    .label());
        CHECK(pair_labels(typecone_facets(Decoration(std::string(n, 'd')))) == expected);
    }
}

TEST_CASE("counts match enumerations everywhere") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> seen;
        for (const Decoration& d : all_decorations(n)) {
            if (!seen.insert(middle_canonical(d).letters).second) continue;
            CHECK(static_cast<long>(permutree_rays(d).size()) == rho(d));
            const auto pairs = exchangeable_pairs(d);
            const auto facets = typecone_facets(d);
            CHECK(static_cast<long>(pairs.size()) == chi(d));
            CHECK(static_cast<long>(facets.size()) == phi(d));
            // facet pairs are exchangeable pairs
            const auto pl = pair_labels(pairs);
            for (const ExchangeablePair& f : facets) CHECK(pl.count(f.label()) == 1);
        }
    }
}

TEST_CASE("simpliciality") {
    CHECK(is_simplicial(Decoration("xdx")));
    CHECK(rho(Decoration("xdx")) == 5);
    CHECK(phi(Decoration("xdx")) == 3);
    CHECK_FALSE(is_simplicial(Decoration("oodo")));
    for (int n = 2; n <= 6; ++n) {
        CHECK(is_simplicial(Decoration(std::string(n, 'd'))));
        for (const Decoration& d : all_decorations(n))
            CHECK(is_simplicial(d) == (rho(d) == phi(d) + n - 1));
    }
}

TEST_CASE("facet oracle against the characterization") {
    CHECK(pair_labels(facet_oracle(Decoration("oxuo"))) ==
          pair_labels(typecone_facets(Decoration("oxuo"))));
    // trivial decoration on 3 letters: every exchangeable pair is a facet
    const Decoration o3("ooo");
    CHECK(facet_oracle(o3) == exchangeable_pairs(o3));
    // binary trees on 3 letters: 3 facets out of 5 exchangeable pairs
    const Decoration d3("ddd");
    CHECK(chi(d3) == 5);
    const auto facets = facet_oracle(d3);
    CHECK(facets.size() == 3);
    CHECK(pair_labels(facets) == pair_labels(typecone_facets(d3)));
}

TEST_CASE("exchangeable pairs arise exactly from rotations") {
    for (int n = 2; n <= 5; ++n) {
        const PermTable table(n);
        std::set<std::string> seen;
        for (const Decoration& d : all_decorations(n)) {
            if (!seen.insert(middle_canonical(d).letters).second) continue;
            CHECK(pairs_by_rotation(d, table) == pair_labels(exchangeable_pairs(d)));
        }
    }
}

TEST_CASE("ray refinement monotonicity") {
    for (int n = 2; n <= 4; ++n) {
        std::map<std::string, std::set<std::uint32_t>> rays;
        for (const Decoration& d : all_decorations(n)) {
            std::set<std::uint32_t>& r = rays[d.letters];
            for (const Subset& I : permutree_rays(d)) r.insert(I.bits);
        }
        for (const Decoration& a : all_decorations(n))
            for (const Decoration& b : all_decorations(n)) {
                if (!refines(a, b)) continue;
                for (std::uint32_t bit : rays[b.letters]) CHECK(rays[a.letters].count(bit) == 1);
            }
    }
}

}  // TEST_SUITE
