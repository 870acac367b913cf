#include <doctest.h>

#include <set>

#include "ptf/permutation.hpp"
#include "ptf/polytope.hpp"

using namespace ptf;

namespace {

// independent oracle: scan all index pairs
std::set<std::pair<int, int>> brute_inversions(const Permutation& p) {
    std::set<std::pair<int, int>> inv;
    for (int i = 1; i <= p.n(); ++i)
        for (int j = i + 1; j <= p.n(); ++j)
            if (p.at(i) > p.at(j)) inv.insert({p.at(i), p.at(j)});
    return inv;
}

}  // namespace

TEST_SUITE("weakorder") {

TEST_CASE("inversion sets") {
    CHECK(inversion_set(Permutation::identity(4)).empty());
    const Permutation rev = Permutation::from_string("4321");
    CHECK(inversion_set(rev).size() == 6);  // all pairs (b, a) with a < b
    for (const auto& [b, a] : inversion_set(rev)) CHECK(a < b);

    const Permutation p = Permutation::from_string("2413");
    const std::vector<std::pair<int, int>> expected = {{2, 1}, {4, 1}, {4, 3}};
    CHECK(inversion_set(p) == expected);

    for (const Permutation& q : PermTable(4).all()) {
        const auto inv = inversion_set(q);
        CHECK(std::set<std::pair<int, int>>(inv.begin(), inv.end()) == brute_inversions(q));
    }
}

TEST_CASE("weak order comparisons") {
    CHECK(weak_leq(Permutation::from_string("123"), Permutation::from_string("321")));
    const Permutation p = Permutation::from_string("213");
    CHECK(weak_leq(p, p));
    CHECK_FALSE(weak_leq(Permutation::from_string("213"), Permutation::from_string("132")));
    CHECK_FALSE(weak_leq(Permutation::from_string("132"), Permutation::from_string("213")));
    CHECK_THROWS_AS(weak_leq(Permutation::from_string("12"), Permutation::from_string("123")),
                    std::invalid_argument);
}

TEST_CASE("cover shards") {
    CHECK(cover_shard(Permutation::from_string("1234"), 1) == Shard::of(1, 2, {}, 4));
    CHECK(cover_shard(Permutation::from_string("2413"), 2) == Shard::of(1, 4, {2}, 4));
    CHECK(cover_shard(Permutation::from_string("231"), 2) == Shard::of(1, 3, {2}, 3));
    CHECK_THROWS_AS(cover_shard(Permutation::from_string("123"), 3), std::out_of_range);

    // the two chambers along a wall agree on the separating shard
    for (const Permutation& p : PermTable(4).all())
        for (int k = 1; k < 4; ++k) {
            const Shard s = cover_shard(p, k);
            CHECK(s == cover_shard(p.adjacent_swap(k), k));
            CHECK(s.i == std::min(p.at(k), p.at(k + 1)));
            CHECK(s.j == std::max(p.at(k), p.at(k + 1)));
        }
}

TEST_CASE("chamber rays are the proper prefixes") {
    auto digits = [](const Permutation& p) {
        std::vector<std::string> out;
        for (const Subset& s : chamber_rays(p)) out.push_back(s.digits());
        return out;
    };
    CHECK(digits(Permutation::from_string("123")) == std::vector<std::string>{"1", "12"});
    CHECK(digits(Permutation::from_string("231")) == std::vector<std::string>{"2", "23"});
    CHECK(digits(Permutation::from_string("4132")) == std::vector<std::string>{"4", "14", "134"});
    for (const Permutation& p : PermTable(5).all()) {
        const auto rays = chamber_rays(p);
        CHECK(rays.size() == 4);
        for (const Subset& s : rays) CHECK(s.proper());
    }
}

TEST_CASE("Hasse diagram sizes of the weak order") {
    auto cover_count = [](int n) {
        long covers = 0;
        for (const Permutation& p : PermTable(n).all())
            for (int k = 1; k < n; ++k)
                if (p.at(k) < p.at(k + 1)) ++covers;  // one orientation per wall
        return covers;
    };
    CHECK(PermTable(3).size() == 6);
    CHECK(cover_count(3) == 6);
    CHECK(PermTable(4).size() == 24);
    CHECK(cover_count(4) == 36);
}

TEST_CASE("linear dependence across adjacent chambers") {
    // exchanged prefixes I, J of adjacent permutations satisfy
    // r(I) + r(J) = r(I cap J) + r(I cup J)
    for (int n = 2; n <= 5; ++n) {
        for (const Permutation& p : PermTable(n).all()) {
            for (int k = 1; k < n; ++k) {
                const Permutation q = p.adjacent_swap(k);
                const Subset I = chamber_rays(p)[k - 1], J = chamber_rays(q)[k - 1];
                const RatVec lhs_a = ray_vector(I), lhs_b = ray_vector(J);
                const RatVec rhs_a = ray_vector(I.set_intersection(J)),
                             rhs_b = ray_vector(I.set_union(J));
                for (int c = 0; c < n; ++c)
                    CHECK(lhs_a[c] + lhs_b[c] == rhs_a[c] + rhs_b[c]);
            }
        }
    }
}

TEST_CASE("direction alpha separates covers") {
    // alpha lies in the chamber of the identity, so the functional on the
    // permutahedron vertices peaks at the bottom element and strictly
    // decreases along every cover; in particular it orients all edges
    const std::vector<long> alpha = direction_alpha(4);
    long sum = 0;
    for (long a : alpha) sum += a;
    CHECK(sum == 0);
    const PermTable table(4);
    for (const Permutation& p : table.all()) {
        for (int k = 1; k < 4; ++k) {
            if (p.at(k) > p.at(k + 1)) continue;
            const Permutation q = p.adjacent_swap(k);  // covers p
            long hp = 0, hq = 0;
            for (int pos = 1; pos <= 4; ++pos) {
                hp += pos * alpha[p.at(pos) - 1];
                hq += pos * alpha[q.at(pos) - 1];
            }
            CHECK(hq < hp);
        }
    }
}

TEST_CASE("permutation table ranks") {
    const PermTable table(5);
    for (std::size_t i = 0; i < table.size(); ++i) CHECK(table.index_of(table[i]) == i);
}

TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1, 2}), std::invalid_argument);
    CHECK(Permutation::from_string("2413").reversed() == Permutation::from_string("3142"));
}

}  // TEST_SUITE
