#include <doctest.h>

#include "ptf/io.hpp"
#include "ptf/realizations.hpp"

using namespace ptf;
using ptf::io::json;

TEST_SUITE("io") {

TEST_CASE("permutation and subset round trips") {
    const Permutation p = Permutation::from_string("2413");
    CHECK(io::permutation_from_json(io::to_json(p)) == p);
    CHECK(io::to_json(p).dump() == "[2,4,1,3]");
    const Subset s = Subset::of({1, 3, 4}, 5);
    CHECK(io::subset_from_json(io::to_json(s), 5) == s);
    CHECK(io::to_json(s).dump() == "[1,3,4]");
}

TEST_CASE("shard and ideal round trips") {
    const Shard sh = Shard::of(1, 4, {2}, 4);
    CHECK(io::shard_from_json(io::to_json(sh), 4) == sh);
    CHECK_THROWS_AS(io::shard_from_json(json::parse(R"({"i":3,"j":2,"s":[]})"), 4),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::shard_from_json(json::parse(R"({"i":1,"j":2,"s":[3]})"), 4),
                    std::invalid_argument);

    const ShardIdeal ideal = permutree_ideal(Decoration("oxuo"));
    CHECK(io::ideal_from_json(io::to_json(ideal)) == ideal);

    // a non-ideal is rejected on load: dropping S(2,3,{}) leaves S(2,4,{})
    // without one of its forcers
    json bad = io::to_json(ideal);
    bad["shards"].erase(1);
    CHECK_THROWS_AS(io::ideal_from_json(bad), std::invalid_argument);
}

TEST_CASE("permutree round trip validates side tags") {
    const PermTable table(4);
    const Decoration d("oxdo");
    for (const Permutree& t : enumerate_permutrees(d, table).trees) {
        const json j = io::to_json(t);
        CHECK(io::permutree_from_json(j, d) == t);
    }
    json j = io::to_json(enumerate_permutrees(d, table).trees.front());
    for (auto& e : j["edges"])
        e["parent_side"] = e["parent_side"] == "left" ? "right" : "left";
    CHECK_THROWS_AS(io::permutree_from_json(j, d), std::invalid_argument);
}

TEST_CASE("polytope round trips") {
    const HPolytope h = removahedron(3, permutree_rays(Decoration("ddd")));
    const HPolytope h2 = io::hpolytope_from_json(io::to_json(h));
    CHECK(h2.n == h.n);
    CHECK(h2.sum_level == h.sum_level);
    CHECK(h2.ineqs == h.ineqs);
    const VPolytope v = vertices(h).poly;
    CHECK(io::vpolytope_from_json(io::to_json(v, 3)) == v);
}

TEST_CASE("counts csv") {
    const std::string csv = io::counts_csv(4);
    CHECK(csv.rfind("decoration,rho,chi,phi,simplicial\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 257);  // header + 4^4 rows
    CHECK(csv.find("oodo,11,19,12,false\n") != std::string::npos);
    CHECK(csv.find("oxuo,7,6,4,true\n") != std::string::npos);
}

TEST_CASE("off export") {
    // pentagon: two-dimensional, one face listing all five vertices
    const HPolytope asso3 = removahedron(3, permutree_rays(Decoration("ddd")));
    const VPolytope v3 = vertices(asso3).poly;
    const std::string off = io::to_off(v3, asso3);
    CHECK(off.rfind("OFF\n", 0) == 0);
    CHECK(off.find("display_only") == std::string::npos);  // integer coordinates
    std::istringstream in(off);
    std::string magic;
    int nv, nf, ne;
    in >> magic >> nv >> nf >> ne;
    CHECK(nv == 5);
    CHECK(nf == 1);

    // 3-dimensional associahedron: Euler check V - E + F = 2
    const HPolytope asso4 = removahedron(4, permutree_rays(Decoration("dddd")));
    const VPolytope v4 = vertices(asso4).poly;
    const std::string off4 = io::to_off(v4, asso4);
    std::istringstream in4(off4);
    in4 >> magic >> nv >> nf >> ne;
    CHECK(nv == 14);
    CHECK(nf == 9);
    // skip vertex lines, then count face-edge incidences
    for (int k = 0; k < nv; ++k) {
        std::string line;
        double x, y, z;
        in4 >> x >> y >> z;
        (void)line;
    }
    int half_edges = 0;
    for (int f = 0; f < nf; ++f) {
        int size;
        in4 >> size;
        half_edges += size;
        for (int k = 0; k < size; ++k) {
            int v;
            in4 >> v;
            CHECK(v >= 0);
            CHECK(v < nv);
        }
    }
    CHECK(half_edges % 2 == 0);
    CHECK(nv - half_edges / 2 + nf == 2);
}

TEST_CASE("rational strings") {
    CHECK(rat_str(rat(6, 4)) == "3/2");
    CHECK(rat_parse("3/2") == rat(3, 2));
    CHECK(rat_parse("-5") == Rat(-5));
}

}  // TEST_SUITE
