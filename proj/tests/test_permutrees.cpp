#include <doctest.h>

#include <map>
#include <set>

#include "ptf/permutree.hpp"

using namespace ptf;

namespace {

Permutree make_tree(const std::string& deco, std::vector<std::pair<int, int>> edges) {
    Permutree t;
    t.deco = Decoration(deco);
    t.n = t.deco.n();
    t.edges = std::move(edges);
    t.sort_edges();
    return t;
}

std::set<std::string> cut_digits(const Permutree& t) {
    std::set<std::string> out;
    for (const Subset& c : edge_cuts(t)) out.insert(c.digits());
    return out;
}

// Loday's vertex: products of leaf counts of the two descendant slots.
std::vector<long> loday_vertex(const Permutree& t) {
    std::vector<long> out(t.n);
    for (int j = 1; j <= t.n; ++j) {
        long left = 0, right = 0;
        for (int c : t.children(j)) {
            const Subset comp = t.cut_of_edge(c, j);
            (comp.max() < j ? left : right) = comp.size();
        }
        out[j - 1] = (left + 1) * (right + 1);
    }
    return out;
}

}  // namespace

TEST_SUITE("permutrees") {

TEST_CASE("validation") {
    const Permutree chain = make_tree("ooo", {{2, 3}, {3, 1}});  // chain of 231
    CHECK(validate(chain).ok);
    const Permutree comb = make_tree("ddd", {{1, 2}, {2, 3}});
    CHECK(validate(comb).ok);
    const Permutree bad = make_tree("odo", {{1, 3}, {3, 2}});
    const TreeCheck chk = validate(bad);
    CHECK_FALSE(chk.ok);
    CHECK(chk.diagnostic == "edge 1->3 crosses the wall below node 2");

    // degree violation: an 'o' node with two children
    const Permutree two_children = make_tree("ooo", {{1, 2}, {3, 2}});
    CHECK_FALSE(validate(two_children).ok);
    // side violation: two descendant subtrees on the same side
    const Permutree two_left = make_tree("ood", {{1, 3}, {2, 3}});
    CHECK_FALSE(validate(two_left).ok);
}

TEST_CASE("edge cuts") {
    CHECK(cut_digits(make_tree("ooo", {{2, 3}, {3, 1}})) == std::set<std::string>{"2", "23"});
    CHECK(cut_digits(make_tree("oooo", {{1, 2}, {2, 3}, {3, 4}})) ==
          std::set<std::string>{"1", "12", "123"});
    CHECK(cut_digits(make_tree("ddd", {{1, 2}, {2, 3}})) == std::set<std::string>{"1", "12"});
}

TEST_CASE("linear extensions") {
    const Permutree chain = make_tree("ooo", {{2, 3}, {3, 1}});
    const std::vector<Permutation> exts = linear_extensions(chain);
    REQUIRE(exts.size() == 1);
    CHECK(exts[0].str() == "231");

    // root 2 with children 1 and 3: the sylvester class {132, 312}
    const Permutree vee = make_tree("ddd", {{1, 2}, {3, 2}});
    std::vector<std::string> words;
    for (const Permutation& p : linear_extensions(vee)) words.push_back(p.str());
    CHECK(words == std::vector<std::string>{"132", "312"});
}

TEST_CASE("extensions match congruence classes") {
    for (int n = 2; n <= 5; ++n) {
        const PermTable table(n);
        std::set<std::string> seen;
        for (const Decoration& d : all_decorations(n)) {
            if (!seen.insert(middle_canonical(d).letters).second) continue;
            const EnumeratedTrees e = enumerate_permutrees(d, table);
            const auto classes = e.partition.classes();
            REQUIRE(e.trees.size() == classes.size());
            for (std::size_t c = 0; c < classes.size(); ++c) {
                std::set<std::string> class_set, ext_set;
                for (std::size_t idx : classes[c]) class_set.insert(table[idx].str());
                for (const Permutation& p : linear_extensions(e.trees[c]))
                    ext_set.insert(p.str());
                CHECK(class_set == ext_set);
            }
        }
    }
}

TEST_CASE("rotation basics") {
    // two nodes: rotation flips the edge
    const Permutree t2 = make_tree("oo", {{1, 2}});
    CHECK(rotate(t2, 1, 2).edges == std::vector<std::pair<int, int>>{{2, 1}});

    // rotating twice along the matching edge returns the original tree
    for (int n = 2; n <= 4; ++n) {
        const PermTable table(n);
        for (const Decoration& d : all_decorations(n))
            for (const Permutree& t : enumerate_permutrees(d, table).trees)
                for (const auto& [f, to] : t.edges) {
                    const Permutree s = rotate(t, f, to);
                    CHECK(rotate(s, to, f) == t);
                }
    }
    CHECK_THROWS_AS(rotate(t2, 2, 1), std::invalid_argument);
}

TEST_CASE("rotation changes exactly one edge cut") {
    for (int n = 2; n <= 5; ++n) {
        const PermTable table(n);
        std::set<std::string> seen;
        for (const Decoration& d : all_decorations(n)) {
            if (!seen.insert(middle_canonical(d).letters).second) continue;
            for (const Permutree& t : enumerate_permutrees(d, table).trees) {
                const std::set<std::string> before = cut_digits(t);
                for (const auto& [f, to] : t.edges) {
                    const std::set<std::string> after = cut_digits(rotate(t, f, to));
                    std::vector<std::string> gone, fresh;
                    std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                                        std::back_inserter(gone));
                    std::set_difference(after.begin(), after.end(), before.begin(), before.end(),
                                        std::back_inserter(fresh));
                    CHECK(gone.size() == 1);
                    CHECK(fresh.size() == 1);
                    CHECK(gone[0] == t.cut_of_edge(f, to).digits());
                }
            }
        }
    }
}

TEST_CASE("enumeration counts") {
    const PermTable table(3);
    CHECK(enumerate_permutrees(Decoration("ooo"), table).trees.size() == 6);
    CHECK(enumerate_permutrees(Decoration("ddd"), table).trees.size() == 5);
    CHECK(enumerate_permutrees(Decoration("xxx"), table).trees.size() == 4);

    // coarser decorations have fewer trees
    const PermTable t4(4);
    std::map<std::string, std::size_t> counts;
    for (const Decoration& d : all_decorations(4))
        counts[d.letters] = enumerate_permutrees(d, t4).trees.size();
    for (const Decoration& a : all_decorations(4))
        for (const Decoration& b : all_decorations(4))
            if (refines(a, b)) CHECK(counts[a.letters] >= counts[b.letters]);
}

TEST_CASE("vertex coordinates") {
    // chains realize the permutahedron vertices
    const PermTable table(4);
    for (const Permutree& t : enumerate_permutrees(Decoration("oooo"), table).trees) {
        const std::vector<Permutation> ext = linear_extensions(t);
        REQUIRE(ext.size() == 1);
        const std::vector<long> coords = vertex_coordinates_int(t);
        for (int pos = 1; pos <= 4; ++pos) CHECK(coords[ext[0].at(pos) - 1] == pos);
    }

    CHECK(vertex_coordinates_int(make_tree("ddd", {{1, 2}, {2, 3}})) ==
          std::vector<long>{1, 2, 3});

    // distinct coordinates, fixed coordinate sum
    for (int n = 2; n <= 5; ++n) {
        const PermTable t(n);
        std::set<std::string> seen;
        for (const Decoration& d : all_decorations(n)) {
            if (!seen.insert(middle_canonical(d).letters).second) continue;
            std::set<std::vector<long>> pts;
            for (const Permutree& tr : enumerate_permutrees(d, t).trees) {
                const std::vector<long> v = vertex_coordinates_int(tr);
                long sum = 0;
                for (long x : v) sum += x;
                CHECK(sum == n * (n + 1) / 2);
                CHECK(pts.insert(v).second);
            }
        }
    }
}

TEST_CASE("Loday leaf products agree with the subtree formula") {
    for (int n = 2; n <= 6; ++n) {
        const PermTable table(n);
        for (const Permutree& t :
             enumerate_permutrees(Decoration(std::string(n, 'd')), table).trees)
            CHECK(vertex_coordinates_int(t) == loday_vertex(t));
    }
}

TEST_CASE("rotation lattices") {
    const PermTable t3(3);
    const RotationGraph penta = rotation_lattice(Decoration("ddd"), t3);
    CHECK(penta.trees.size() == 5);
    std::size_t arcs = 0;
    for (const auto& a : penta.increasing) arcs += a.size();
    CHECK(arcs == 5);  // pentagon
    CHECK(penta.lattice);

    // trivial decoration: the weak order itself
    const PermTable t4(4);
    const RotationGraph weak = rotation_lattice(Decoration("oooo"), t4);
    CHECK(weak.trees.size() == 24);
    arcs = 0;
    for (const auto& a : weak.increasing) arcs += a.size();
    CHECK(arcs == 36);
    CHECK(weak.lattice);

    // updown everywhere: the boolean lattice on n-1 atoms
    const RotationGraph boolean = rotation_lattice(Decoration("xxxx"), t4);
    CHECK(boolean.trees.size() == 8);
    arcs = 0;
    for (const auto& a : boolean.increasing) arcs += a.size();
    CHECK(arcs == 3 * 4);  // (n-1) 2^(n-2)
    CHECK(boolean.lattice);

    CHECK(rotation_lattice(Decoration("oodo"), t4).lattice);
    CHECK(rotation_lattice(Decoration("oxuo"), t4).lattice);
}

TEST_CASE("rotation digraph matches the quotient lattice covers") {
    const PermTable table(4);
    for (const std::string& letters : {"oodo", "oxuo", "dddd", "xxxx"}) {
        const Decoration d(letters);
        const RotationGraph g = rotation_lattice(d, table);
        const Congruence cong = congruence_classes(permutree_ideal(d), table);
        const auto leq = quotient_order(cong.classes, table);
        // tree index c corresponds to class c by construction
        std::size_t quotient_covers = 0;
        for (int a = 0; a < cong.classes.num_classes; ++a)
            for (int b = 0; b < cong.classes.num_classes; ++b) {
                if (a == b || !leq[a][b]) continue;
                bool cover = true;
                for (int z = 0; z < cong.classes.num_classes && cover; ++z)
                    if (z != a && z != b && leq[a][z] && leq[z][b]) cover = false;
                if (cover) ++quotient_covers;
            }
        std::size_t arcs = 0;
        for (std::size_t i = 0; i < g.increasing.size(); ++i) {
            arcs += g.increasing[i].size();
            for (int j : g.increasing[i]) CHECK(leq[i][j]);
        }
        CHECK(arcs == quotient_covers);
    }
}

}  // TEST_SUITE
