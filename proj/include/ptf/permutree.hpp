#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ptf/congruence.hpp"
#include "ptf/decoration.hpp"
#include "ptf/permutation.hpp"
#include "ptf/rational.hpp"
#include "ptf/subset.hpp"

namespace ptf {

// Oriented tree on [n] respecting a decoration. Edges point child -> parent
// (drawn bottom-up). Blossoms (unused parent/child slots) stay implicit.
struct Permutree {
    int n = 0;
    Decoration deco;
    std::vector<std::pair<int, int>> edges;  // (from, to), sorted

    void sort_edges();
    bool has_edge(int from, int to) const;
    std::vector<int> parents(int v) const;
    std::vector<int> children(int v) const;

    // Source-side component of `from` once the edge is deleted.
    Subset cut_of_edge(int from, int to) const;

    bool operator==(const Permutree& o) const {
        return n == o.n && deco == o.deco && edges == o.edges;
    }
    bool operator<(const Permutree& o) const { return edges < o.edges; }
};

struct TreeCheck {
    bool ok = true;
    std::string diagnostic;
};

// Degree/slot conditions plus the red-wall test: an edge spanning values
// [m, M] must keep every m < k < M with k in delta^- on its source side
// and every k in delta^+ off it.
TreeCheck validate(const Permutree& t);

// One cut per edge, source sides.
std::vector<Subset> edge_cuts(const Permutree& t);

// All linear extensions of the tree order (words listing sources first).
std::vector<Permutation> linear_extensions(const Permutree& t);

// Rotation of the edge from -> to: reverses the edge and reattaches the
// descendant subtree of `from` facing `to` and the ancestor subtree of
// `to` facing `from`. The result is the unique permutree sharing all other
// edge cuts.
Permutree rotate(const Permutree& t, int from, int to);

// Reconstructs the permutree of one congruence class: the class words are
// intersected into a poset whose Hasse diagram is the tree.
Permutree tree_from_class(const Decoration& d, const std::vector<Permutation>& class_perms);

struct EnumeratedTrees {
    std::vector<Permutree> trees;  // trees[c] belongs to class c
    Partition partition;
};

// One permutree per class of the permutree congruence.
EnumeratedTrees enumerate_permutrees(const Decoration& d, const PermTable& table);

// Vertex of the permutreehedron: coordinate 1 + d + ld*rd - la*ra per node,
// with descendant counts d and the left/right descendant (ld, rd) and
// ancestor (la, ra) subtree sizes; unsplit slots contribute zero products.
std::vector<long> vertex_coordinates_int(const Permutree& t);
RatVec vertex_coordinates(const Permutree& t);

struct RotationGraph {
    std::vector<Permutree> trees;
    std::vector<std::vector<int>> increasing;  // arcs T -> S reversing i->j, i<j
    bool lattice = false;
};

// Increasing rotation digraph; `lattice` records whether its transitive
// closure is a lattice.
RotationGraph rotation_lattice(const Decoration& d, const PermTable& table);

}  // namespace ptf
