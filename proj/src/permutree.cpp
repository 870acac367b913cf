#include "ptf/permutree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ptf {

void Permutree::sort_edges() { std::sort(edges.begin(), edges.end()); }

bool Permutree::has_edge(int from, int to) const {
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(from, to));
}

std::vector<int> Permutree::parents(int v) const {
    std::vector<int> out;
    for (const auto& [f, t] : edges)
        if (f == v) out.push_back(t);
    return out;
}

std::vector<int> Permutree::children(int v) const {
    std::vector<int> out;
    for (const auto& [f, t] : edges)
        if (t == v) out.push_back(f);
    return out;
}

Subset Permutree::cut_of_edge(int from, int to) const {
    std::vector<int> stack{from};
    Subset comp(0, n);
    comp.bits |= 1u << (from - 1);
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (const auto& [f, t] : edges) {
            if (f == from && t == to) continue;
            int other = -1;
            if (f == v) other = t;
            if (t == v) other = f;
            if (other != -1 && !comp.contains(other)) {
                comp.bits |= 1u << (other - 1);
                stack.push_back(other);
            }
        }
    }
    return comp;
}

namespace {

// Side of a subtree relative to node v: -1 all smaller, +1 all larger,
// 0 mixed or empty.
int subtree_side(const Subset& comp, int v) {
    if (comp.is_empty()) return 0;
    if (comp.max() < v) return -1;
    if (comp.min() > v) return 1;
    return 0;
}

}  // namespace

TreeCheck validate(const Permutree& t) {
    const int n = t.n;
    if (static_cast<int>(t.edges.size()) != n - 1)
        return {false, "expected " + std::to_string(n - 1) + " edges"};
    for (const auto& [f, to] : t.edges)
        if (f < 1 || f > n || to < 1 || to > n || f == to)
            return {false, "edge endpoints out of range"};
    // connectivity
    {
        std::vector<int> stack{1};
        Subset seen(1u, n);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (const auto& [f, to] : t.edges) {
                int other = -1;
                if (f == v) other = to;
                if (to == v) other = f;
                if (other != -1 && !seen.contains(other)) {
                    seen.bits |= 1u << (other - 1);
                    stack.push_back(other);
                }
            }
        }
        if (!seen.is_full()) return {false, "underlying graph is not connected"};
    }
    // degree conditions
    for (int v = 1; v <= n; ++v) {
        if (static_cast<int>(t.children(v).size()) > (t.deco.in_minus(v) ? 2 : 1))
            return {false, "node " + std::to_string(v) + " has too many children"};
        if (static_cast<int>(t.parents(v).size()) > (t.deco.in_plus(v) ? 2 : 1))
            return {false, "node " + std::to_string(v) + " has too many parents"};
    }
    // red-wall test, edge by edge
    for (const auto& [f, to] : t.edges) {
        const Subset cut = t.cut_of_edge(f, to);
        const int lo = std::min(f, to), hi = std::max(f, to);
        for (int k = lo + 1; k < hi; ++k) {
            if (t.deco.in_minus(k) && !cut.contains(k))
                return {false, "edge " + std::to_string(f) + "->" + std::to_string(to) +
                                   " crosses the wall below node " + std::to_string(k)};
            if (t.deco.in_plus(k) && cut.contains(k))
                return {false, "edge " + std::to_string(f) + "->" + std::to_string(to) +
                                   " crosses the wall above node " + std::to_string(k)};
        }
    }
    // left/right slot consistency of the split nodes
    for (int v = 1; v <= n; ++v) {
        if (t.deco.in_minus(v)) {
            int left = 0, right = 0;
            for (int c : t.children(v)) {
                const int side = subtree_side(t.cut_of_edge(c, v), v);
                if (side == 0)
                    return {false, "descendant subtree at node " + std::to_string(v) +
                                       " mixes values on both sides"};
                (side < 0 ? left : right)++;
            }
            if (left > 1 || right > 1)
                return {false,
                        "node " + std::to_string(v) + " has two descendant subtrees on one side"};
        }
        if (t.deco.in_plus(v)) {
            int left = 0, right = 0;
            for (int p : t.parents(v)) {
                const int side = subtree_side(t.cut_of_edge(v, p).complement(), v);
                if (side == 0)
                    return {false, "ancestor subtree at node " + std::to_string(v) +
                                       " mixes values on both sides"};
                (side < 0 ? left : right)++;
            }
            if (left > 1 || right > 1)
                return {false,
                        "node " + std::to_string(v) + " has two ancestor subtrees on one side"};
        }
    }
    return {};
}

std::vector<Subset> edge_cuts(const Permutree& t) {
    std::vector<Subset> cuts;
    for (const auto& [f, to] : t.edges) cuts.push_back(t.cut_of_edge(f, to));
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

namespace {

void extend(const Permutree& t, std::vector<int>& placed, Subset& used,
            std::vector<Permutation>& out) {
    if (static_cast<int>(placed.size()) == t.n) {
        out.push_back(Permutation(placed));
        return;
    }
    for (int v = 1; v <= t.n; ++v) {
        if (used.contains(v)) continue;
        bool ready = true;
        for (int c : t.children(v))
            if (!used.contains(c)) {
                ready = false;
                break;
            }
        if (!ready) continue;
        placed.push_back(v);
        used.bits |= 1u << (v - 1);
        extend(t, placed, used, out);
        used.bits &= ~(1u << (v - 1));
        placed.pop_back();
    }
}

}  // namespace

std::vector<Permutation> linear_extensions(const Permutree& t) {
    std::vector<Permutation> out;
    std::vector<int> placed;
    Subset used(0, t.n);
    extend(t, placed, used, out);
    std::sort(out.begin(), out.end());
    return out;
}

Permutree rotate(const Permutree& t, int from, int to) {
    if (!t.has_edge(from, to)) throw std::invalid_argument("edge not present");
    const Decoration& d = t.deco;
    // descendant subtree of `from` facing `to`
    int d_child = -1;
    for (int c : t.children(from)) {
        if (!d.in_minus(from)) {
            d_child = c;  // only slot
        } else {
            const int side = subtree_side(t.cut_of_edge(c, from), from);
            if ((to > from && side > 0) || (to < from && side < 0)) d_child = c;
        }
    }
    // ancestor subtree of `to` facing `from`
    int u_parent = -1;
    for (int p : t.parents(to)) {
        if (p == from) continue;  // not an ancestor slot of `to` here
        if (!d.in_plus(to)) {
            u_parent = p;
        } else {
            const int side = subtree_side(t.cut_of_edge(to, p).complement(), to);
            if ((from < to && side < 0) || (from > to && side > 0)) u_parent = p;
        }
    }
    Permutree s = t;
    auto drop = [&s](int f, int tt) {
        s.edges.erase(std::find(s.edges.begin(), s.edges.end(), std::make_pair(f, tt)));
    };
    drop(from, to);
    s.edges.emplace_back(to, from);
    if (d_child != -1) {
        drop(d_child, from);
        s.edges.emplace_back(d_child, to);
    }
    if (u_parent != -1) {
        drop(to, u_parent);
        s.edges.emplace_back(from, u_parent);
    }
    s.sort_edges();
    const TreeCheck chk = validate(s);
    if (!chk.ok) throw std::logic_error("rotation produced an invalid tree: " + chk.diagnostic);
    return s;
}

Permutree tree_from_class(const Decoration& d, const std::vector<Permutation>& class_perms) {
    if (class_perms.empty()) throw std::invalid_argument("empty class");
    const int n = class_perms.front().n();
    // before[x][y]: x precedes y in every word of the class
    std::vector<std::vector<bool>> before(n + 1, std::vector<bool>(n + 1, true));
    for (int x = 1; x <= n; ++x) before[x][x] = false;
    for (const Permutation& p : class_perms) {
        std::vector<int> pos(n + 1);
        for (int k = 1; k <= n; ++k) pos[p.at(k)] = k;
        for (int x = 1; x <= n; ++x)
            for (int y = 1; y <= n; ++y)
                if (x != y && pos[x] > pos[y]) before[x][y] = false;
    }
    Permutree t;
    t.n = n;
    t.deco = d;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) {
            if (!before[x][y]) continue;
            bool cover = true;
            for (int z = 1; z <= n && cover; ++z)
                if (before[x][z] && before[z][y]) cover = false;
            if (cover) t.edges.emplace_back(x, y);
        }
    t.sort_edges();
    const TreeCheck chk = validate(t);
    if (!chk.ok)
        throw std::logic_error("class does not define a permutree: " + chk.diagnostic);
    return t;
}

EnumeratedTrees enumerate_permutrees(const Decoration& d, const PermTable& table) {
    const Congruence cong = congruence_classes(permutree_ideal(d), table);
    EnumeratedTrees out;
    out.partition = cong.classes;
    for (const std::vector<std::size_t>& cls : cong.classes.classes()) {
        std::vector<Permutation> perms;
        perms.reserve(cls.size());
        for (std::size_t idx : cls) perms.push_back(table[idx]);
        out.trees.push_back(tree_from_class(d, perms));
    }
    return out;
}

std::vector<long> vertex_coordinates_int(const Permutree& t) {
    std::vector<long> coords(t.n);
    for (int v = 1; v <= t.n; ++v) {
        long desc = 0, ld = 0, rd = 0, la = 0, ra = 0;
        for (int c : t.children(v)) {
            const Subset comp = t.cut_of_edge(c, v);
            desc += comp.size();
            if (t.deco.in_minus(v)) {
                if (subtree_side(comp, v) < 0)
                    ld = comp.size();
                else
                    rd = comp.size();
            }
        }
        if (t.deco.in_plus(v)) {
            for (int p : t.parents(v)) {
                const Subset comp = t.cut_of_edge(v, p).complement();
                if (subtree_side(comp, v) < 0)
                    la = comp.size();
                else
                    ra = comp.size();
            }
        }
        coords[v - 1] = 1 + desc + ld * rd - la * ra;
    }
    return coords;
}

RatVec vertex_coordinates(const Permutree& t) {
    RatVec out;
    for (long x : vertex_coordinates_int(t)) out.emplace_back(x);
    return out;
}

RotationGraph rotation_lattice(const Decoration& d, const PermTable& table) {
    RotationGraph g;
    EnumeratedTrees e = enumerate_permutrees(d, table);
    g.trees = std::move(e.trees);
    std::map<std::vector<std::pair<int, int>>, int> index;
    for (std::size_t i = 0; i < g.trees.size(); ++i) index[g.trees[i].edges] = static_cast<int>(i);
    g.increasing.resize(g.trees.size());
    for (std::size_t i = 0; i < g.trees.size(); ++i)
        for (const auto& [f, to] : g.trees[i].edges)
            if (f < to) {
                const Permutree s = rotate(g.trees[i], f, to);
                g.increasing[i].push_back(index.at(s.edges));
            }
    // transitive closure, then the lattice test
    const int m = static_cast<int>(g.trees.size());
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i) {
        std::vector<int> stack{i};
        leq[i][i] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : g.increasing[v])
                if (!leq[i][w]) {
                    leq[i][w] = true;
                    stack.push_back(w);
                }
        }
    }
    g.lattice = is_lattice(leq);
    return g;
}

}  // namespace ptf
