#include <doctest.h>

#include <map>
#include <set>

#include "ptf/congruence.hpp"
#include "ptf/shard.hpp"

using namespace ptf;

namespace {

std::vector<std::vector<std::string>> class_words(const Partition& part, const PermTable& table) {
    std::vector<std::vector<std::string>> out(part.num_classes);
    for (std::size_t i = 0; i < table.size(); ++i)
        out[part.class_of[i]].push_back(table[i].str());
    return out;
}

}  // namespace

TEST_SUITE("shards") {

TEST_CASE("forcing relation") {
    CHECK(forces(Shard::of(1, 2, {}, 4), Shard::of(1, 3, {}, 4)));
    CHECK(forces(Shard::of(2, 3, {}, 4), Shard::of(1, 3, {2}, 4)));
    CHECK_FALSE(forces(Shard::of(1, 3, {}, 4), Shard::of(1, 2, {}, 4)));
    // basic shards force every shard spanning them
    CHECK(forces(Shard::of(2, 3, {}, 4), Shard::of(1, 4, {2}, 4)));
    CHECK(forces(Shard::of(2, 3, {}, 4), Shard::of(1, 4, {3}, 4)));
    CHECK_FALSE(forces(Shard::of(1, 3, {}, 4), Shard::of(1, 4, {2}, 4)));
    CHECK_FALSE(forces(Shard::of(1, 3, {2}, 4), Shard::of(1, 4, {3}, 4)));
}

TEST_CASE("shard poset size and order axioms") {
    CHECK(shard_poset(2).size() == 1);
    CHECK(shard_poset(3).size() == 4);
    CHECK(shard_poset(4).size() == 11);
    for (int n = 2; n <= 6; ++n) {
        const std::vector<Shard> poset = shard_poset(n);
        std::size_t expected = 0;
        for (int len = 1; len < n; ++len) expected += (n - len) * (1u << (len - 1));
        CHECK(poset.size() == expected);
        for (const Shard& a : poset) CHECK_FALSE(forces(a, a));
        // forcing is transitive
        for (const Shard& a : poset)
            for (const Shard& b : poset)
                for (const Shard& c : poset)
                    if (forces(a, b) && forces(b, c)) CHECK(forces(a, c));
    }
}

TEST_CASE("ideal validation") {
    const int n = 4;
    const std::vector<Shard> all = shard_poset(n);
    CHECK(std::holds_alternative<ShardIdeal>(validate_ideal(n, all)));
    CHECK(std::get<ShardIdeal>(validate_ideal(n, all)).essential());

    std::vector<Shard> minus_top;
    for (const Shard& s : all)
        if (s != Shard::of(1, 4, {2, 3}, n)) minus_top.push_back(s);
    auto ok = validate_ideal(n, minus_top);
    CHECK(std::holds_alternative<ShardIdeal>(ok));
    CHECK(std::get<ShardIdeal>(ok).essential());

    std::vector<Shard> minus_basic;
    for (const Shard& s : all)
        if (s != Shard::of(1, 2, {}, n)) minus_basic.push_back(s);
    auto bad = validate_ideal(n, minus_basic);
    REQUIRE(std::holds_alternative<NotUpwardClosed>(bad));
    CHECK(std::get<NotUpwardClosed>(bad).missing == Shard::of(1, 2, {}, n));
}

TEST_CASE("congruence classes for trivial and full ideals") {
    const PermTable table(3);
    const ShardIdeal full = std::get<ShardIdeal>(validate_ideal(3, shard_poset(3)));
    CHECK(congruence_classes(full, table).classes.num_classes == 6);
    const ShardIdeal empty = std::get<ShardIdeal>(validate_ideal(3, {}));
    CHECK(congruence_classes(empty, table).classes.num_classes == 1);
}

TEST_CASE("sylvester congruence") {
    const PermTable t3(3);
    const Congruence sylv3 = congruence_classes(permutree_ideal(Decoration("ddd")), t3);
    CHECK(sylv3.classes.num_classes == 5);
    const auto words = class_words(sylv3.classes, t3);
    std::set<std::vector<std::string>> wanted = {
        {"123"}, {"213"}, {"231"}, {"321"}, {"132", "312"}};
    CHECK(std::set<std::vector<std::string>>(words.begin(), words.end()) == wanted);

    const PermTable t4(4);
    CHECK(congruence_classes(permutree_ideal(Decoration("dddd")), t4).classes.num_classes == 14);
}

TEST_CASE("rewriting rules agree with the adjacency construction") {
    for (int n = 2; n <= 4; ++n) {
        const PermTable table(n);
        for (const Decoration& d : all_decorations(n))
            CHECK(rewriting_classes(d, table) ==
                  congruence_classes(permutree_ideal(d), table).classes);
    }
}

TEST_CASE("permutree ideals") {
    CHECK(permutree_ideal(Decoration("oooo")).shards.size() == 11);
    const ShardIdeal up = permutree_ideal(Decoration("dddd"));
    for (const Shard& s : up.shards) CHECK(s.is_up());
    CHECK(up.shards.size() == 6);  // one up shard per pair i < j

    const ShardIdeal oxuo = permutree_ideal(Decoration("oxuo"));
    const std::vector<Shard> expected = {Shard::of(1, 2, {}, 4), Shard::of(2, 3, {}, 4),
                                         Shard::of(2, 4, {}, 4), Shard::of(3, 4, {}, 4)};
    CHECK(std::set<Shard>(oxuo.shards.begin(), oxuo.shards.end()) ==
          std::set<Shard>(expected.begin(), expected.end()));

    // always upward closed, every decoration
    for (int n = 2; n <= 6; ++n)
        for (const Decoration& d : all_decorations(n)) {
            const ShardIdeal ideal = permutree_ideal(d);
            CHECK(std::holds_alternative<ShardIdeal>(validate_ideal(n, ideal.shards)));
        }
}

TEST_CASE("decoding decorations from ideals") {
    const int n = 4;
    const auto full = ideal_decoration(permutree_ideal(Decoration("oooo")));
    REQUIRE(std::holds_alternative<Decoration>(full));
    CHECK(std::get<Decoration>(full).letters == "oooo");

    const auto sylv = ideal_decoration(permutree_ideal(Decoration("dddd")));
    REQUIRE(std::holds_alternative<Decoration>(sylv));
    CHECK(std::get<Decoration>(sylv).letters == "oddo");  // boundary letters normalize to o

    std::vector<Shard> minus_mixed;
    for (const Shard& s : shard_poset(n))
        if (s != Shard::of(1, 4, {2}, n)) minus_mixed.push_back(s);
    const auto not_tree = ideal_decoration(std::get<ShardIdeal>(validate_ideal(n, minus_mixed)));
    REQUIRE(std::holds_alternative<NotPermutree>(not_tree));
    CHECK(std::get<NotPermutree>(not_tree).witness == Shard::of(1, 4, {2}, n));
    CHECK(std::get<NotPermutree>(not_tree).witness.length() == 3);

    for (int m = 2; m <= 5; ++m)
        for (const Decoration& d : all_decorations(m)) {
            const auto decoded = ideal_decoration(permutree_ideal(d));
            REQUIRE(std::holds_alternative<Decoration>(decoded));
            CHECK(std::get<Decoration>(decoded).letters == middle_canonical(d).letters);
        }
}

TEST_CASE("decoration refinement refines congruence classes") {
    const int n = 4;
    const PermTable table(n);
    std::map<std::string, Partition> classes;
    for (const Decoration& d : all_decorations(n))
        classes[d.letters] = congruence_classes(permutree_ideal(d), table).classes;
    for (const Decoration& a : all_decorations(n))
        for (const Decoration& b : all_decorations(n))
            if (refines(a, b)) CHECK(classes[a.letters].refines(classes[b.letters]));
}

TEST_CASE("all upper ideals: quotients are lattices, essential means lonely identity") {
    const int n = 4;
    const PermTable table(n);
    const std::vector<ShardIdeal> ideals = enumerate_upper_ideals(n);
    CHECK(ideals.size() == 60);  // recorded by this enumeration
    long essential = 0;
    for (const ShardIdeal& ideal : ideals) {
        const Congruence cong = congruence_classes(ideal, table);
        CHECK(is_lattice(quotient_order(cong.classes, table)));
        const std::size_t id_class = cong.classes.class_of[table.index_of(Permutation::identity(n))];
        std::size_t id_size = 0;
        for (int c : cong.classes.class_of)
            if (static_cast<std::size_t>(c) == id_class) ++id_size;
        CHECK(cong.essential == (id_size == 1));
        if (cong.essential) ++essential;
    }
    CHECK(essential == 47);
}

TEST_CASE("antipodal involution flips shards and reverses words") {
    const int n = 4;
    const PermTable table(n);
    const ShardIdeal sylv = permutree_ideal(Decoration("dddd"));
    const ShardIdeal anti = sylv.antipodal();
    for (const Shard& s : anti.shards) CHECK(s.is_down());
    CHECK(anti == permutree_ideal(Decoration("uuuu")));
    const Partition a = congruence_classes(sylv, table).classes;
    const Partition b = congruence_classes(anti, table).classes;
    for (const Permutation& p : table.all())
        for (const Permutation& q : table.all()) {
            const bool same_a = a.class_of[table.index_of(p)] == a.class_of[table.index_of(q)];
            const bool same_b = b.class_of[table.index_of(p.reversed())] ==
                                b.class_of[table.index_of(q.reversed())];
            CHECK(same_a == same_b);
        }
}

TEST_CASE("shards through a ray") {
    const Subset I = Subset::of({2}, 4);
    const std::vector<Shard> expected = {Shard::of(1, 3, {2}, 4), Shard::of(3, 4, {}, 4)};
    CHECK(shards_through_ray(I) == expected);
    for (int n = 2; n <= 6; ++n)
        for (const Subset& s : proper_subsets(n))
            CHECK(shards_through_ray(s).size() == static_cast<std::size_t>(n - 2));
}

TEST_CASE("quotient fan rays") {
    const int n = 4;
    const ShardIdeal full = std::get<ShardIdeal>(validate_ideal(n, shard_poset(n)));
    CHECK(quotient_fan_rays(full).size() == 14);
    std::vector<Shard> minus_top;
    for (const Shard& s : shard_poset(n))
        if (s != Shard::of(1, 4, {2, 3}, n)) minus_top.push_back(s);
    const std::vector<Subset> rays =
        quotient_fan_rays(std::get<ShardIdeal>(validate_ideal(n, minus_top)));
    CHECK(rays.size() == 13);
    for (const Subset& r : rays) CHECK(r != Subset::of({2, 3}, 4));
}

TEST_CASE("arc diagrams") {
    CHECK(arc_diagram(Shard::of(1, 4, {2}, 4)) == "  -\n* o o *\n    -\n");
    CHECK(arc_diagram(Shard::of(2, 3, {}, 4)) == "\no * * o\n\n");
}

}  // TEST_SUITE
