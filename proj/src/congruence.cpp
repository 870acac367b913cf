#include "ptf/congruence.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ptf {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

Partition partition_from_uf(UnionFind& uf) {
    Partition part;
    part.class_of.resize(uf.parent.size());
    for (std::size_t i = 0; i < uf.parent.size(); ++i)
        part.class_of[i] = uf.find(static_cast<int>(i));
    part.canonicalize();
    return part;
}

}  // namespace

bool ShardIdeal::contains(const Shard& s) const {
    return std::binary_search(shards.begin(), shards.end(), s);
}

bool ShardIdeal::essential() const {
    for (int i = 1; i < n; ++i)
        if (!contains(Shard(i, i + 1, 0, n))) return false;
    return true;
}

ShardIdeal ShardIdeal::antipodal() const {
    ShardIdeal out;
    out.n = n;
    for (const Shard& s : shards)
        out.shards.emplace_back(s.i, s.j, s.open_interval_bits() ^ s.s, n);
    std::sort(out.shards.begin(), out.shards.end());
    return out;
}

std::variant<ShardIdeal, NotUpwardClosed> validate_ideal(int n, std::vector<Shard> shards) {
    std::sort(shards.begin(), shards.end());
    shards.erase(std::unique(shards.begin(), shards.end()), shards.end());
    ShardIdeal ideal{n, std::move(shards)};
    const std::vector<Shard> poset = shard_poset(n);
    for (const Shard& member : ideal.shards)
        for (const Shard& other : poset)
            if (!ideal.contains(other) && forces(other, member))
                return NotUpwardClosed{member, other};
    return ideal;
}

void Partition::canonicalize() {
    std::map<int, int> relabel;
    for (int& c : class_of) {
        auto [it, inserted] = relabel.try_emplace(c, static_cast<int>(relabel.size()));
        c = it->second;
    }
    num_classes = static_cast<int>(relabel.size());
}

std::vector<std::vector<std::size_t>> Partition::classes() const {
    std::vector<std::vector<std::size_t>> out(num_classes);
    for (std::size_t i = 0; i < class_of.size(); ++i) out[class_of[i]].push_back(i);
    return out;
}

bool Partition::refines(const Partition& coarser) const {
    if (class_of.size() != coarser.class_of.size()) return false;
    std::map<int, int> image;
    for (std::size_t i = 0; i < class_of.size(); ++i) {
        auto [it, inserted] = image.try_emplace(class_of[i], coarser.class_of[i]);
        if (!inserted && it->second != coarser.class_of[i]) return false;
    }
    return true;
}

Congruence congruence_classes(const ShardIdeal& ideal, const PermTable& table) {
    UnionFind uf(table.size());
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        const Permutation& p = table[idx];
        for (int k = 1; k < table.n(); ++k) {
            if (p.at(k) > p.at(k + 1)) continue;  // handle each wall once
            if (!ideal.contains(cover_shard(p, k)))
                uf.unite(static_cast<int>(idx),
                         static_cast<int>(table.index_of(p.adjacent_swap(k))));
        }
    }
    Congruence c;
    c.ideal = ideal;
    c.classes = partition_from_uf(uf);
    c.essential = ideal.essential();
    return c;
}

Partition rewriting_classes(const Decoration& d, const PermTable& table) {
    UnionFind uf(table.size());
    const int n = table.n();
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        const Permutation& p = table[idx];
        for (int pos = 1; pos < n; ++pos) {
            const int x = p.at(pos), y = p.at(pos + 1);
            const int lo = std::min(x, y), hi = std::max(x, y);
            // U ik V j W ~ U ki V j W with some lo < j < hi after the pair
            bool apply = false;
            for (int q = pos + 2; q <= n && !apply; ++q) {
                const int j = p.at(q);
                if (lo < j && j < hi && d.in_minus(j)) apply = true;
            }
            // U j V ik W ~ U j V ki W with some lo < j < hi before the pair
            for (int q = 1; q < pos && !apply; ++q) {
                const int j = p.at(q);
                if (lo < j && j < hi && d.in_plus(j)) apply = true;
            }
            if (apply)
                uf.unite(static_cast<int>(idx),
                         static_cast<int>(table.index_of(p.adjacent_swap(pos))));
        }
    }
    return partition_from_uf(uf);
}

ShardIdeal permutree_ideal(const Decoration& d) {
    const int n = d.n();
    const std::uint32_t minus = d.minus_set().bits, plus = d.plus_set().bits;
    ShardIdeal ideal;
    ideal.n = n;
    for (const Shard& s : shard_poset(n)) {
        const std::uint32_t open = s.open_interval_bits();
        if ((minus & open & ~s.s) == 0 && (s.s & plus) == 0) ideal.shards.push_back(s);
    }
    return ideal;
}

std::variant<Decoration, NotPermutree> ideal_decoration(const ShardIdeal& ideal) {
    const int n = ideal.n;
    std::vector<Shard> lower;
    for (const Shard& s : shard_poset(n))
        if (!ideal.contains(s)) lower.push_back(s);
    // Generators: maximal elements of the lower ideal, those forced by no
    // other member.
    std::vector<Shard> gens;
    for (const Shard& s : lower) {
        bool maximal = true;
        for (const Shard& t : lower)
            if (t != s && forces(t, s)) {
                maximal = false;
                break;
            }
        if (maximal) gens.push_back(s);
    }
    std::string letters(n, 'o');
    for (const Shard& g : gens) {
        if (g.length() != 2) return NotPermutree{g};
        const int k = g.i + 1;
        const bool up = g.is_up();  // excluded sigma(k-1,k+1,{k}) marks delta^+
        char& c = letters[k - 1];
        if (up)
            c = (c == 'd' || c == 'x') ? 'x' : 'u';
        else
            c = (c == 'u' || c == 'x') ? 'x' : 'd';
    }
    return Decoration(letters);
}

std::vector<ShardIdeal> enumerate_upper_ideals(int n) {
    const std::vector<Shard> poset = shard_poset(n);
    const std::size_t m = poset.size();
    if (m > 24) throw std::invalid_argument("shard poset too large to enumerate");
    // forced_by[k] = mask of shards forcing poset[k]
    std::vector<std::uint32_t> forced_by(m, 0);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l)
            if (l != k && forces(poset[l], poset[k])) forced_by[k] |= 1u << l;
    std::vector<ShardIdeal> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool closed = true;
        for (std::size_t k = 0; k < m && closed; ++k)
            if ((mask >> k) & 1u) closed = (forced_by[k] & ~mask) == 0;
        if (!closed) continue;
        ShardIdeal ideal;
        ideal.n = n;
        for (std::size_t k = 0; k < m; ++k)
            if ((mask >> k) & 1u) ideal.shards.push_back(poset[k]);
        out.push_back(std::move(ideal));
    }
    return out;
}

std::vector<Shard> shards_through_ray(const Subset& I) {
    std::vector<Shard> out;
    const int n = I.n;
    const std::vector<int> in = I.members();
    for (std::size_t k = 0; k + 1 < in.size(); ++k)
        out.emplace_back(in[k], in[k + 1], 0, n);
    const std::vector<int> outside = I.complement().members();
    for (std::size_t k = 0; k + 1 < outside.size(); ++k) {
        Shard up(outside[k], outside[k + 1], 0, n);
        up.s = up.open_interval_bits();
        out.push_back(up);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Subset> quotient_fan_rays(const ShardIdeal& ideal) {
    std::vector<Subset> rays;
    for (const Subset& I : proper_subsets(ideal.n)) {
        bool keep = true;
        for (const Shard& s : shards_through_ray(I))
            if (!ideal.contains(s)) {
                keep = false;
                break;
            }
        if (keep) rays.push_back(I);
    }
    return rays;
}

std::vector<std::vector<bool>> quotient_order(const Partition& classes, const PermTable& table) {
    const int m = classes.num_classes;
    std::vector<std::vector<std::uint64_t>> inv(m);
    for (std::size_t i = 0; i < table.size(); ++i)
        inv[classes.class_of[i]].push_back(inversion_bits(table[i]));
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            bool found = false;
            for (std::uint64_t ia : inv[a]) {
                for (std::uint64_t ib : inv[b])
                    if ((ia & ~ib) == 0) {
                        found = true;
                        break;
                    }
                if (found) break;
            }
            leq[a][b] = found;
        }
    return leq;
}

bool is_lattice(const std::vector<std::vector<bool>>& leq) {
    const int m = static_cast<int>(leq.size());
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            // least upper bound
            int lub = -1;
            for (int u = 0; u < m; ++u) {
                if (!(leq[a][u] && leq[b][u])) continue;
                if (lub == -1 || leq[u][lub]) lub = u;
            }
            if (lub == -1) return false;
            for (int u = 0; u < m; ++u)
                if (leq[a][u] && leq[b][u] && !leq[lub][u]) return false;
            // greatest lower bound
            int glb = -1;
            for (int v = 0; v < m; ++v) {
                if (!(leq[v][a] && leq[v][b])) continue;
                if (glb == -1 || leq[glb][v]) glb = v;
            }
            if (glb == -1) return false;
            for (int v = 0; v < m; ++v)
                if (leq[v][a] && leq[v][b] && !leq[v][glb]) return false;
        }
    return true;
}

}  // namespace ptf
