#include "ptf/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ptf/parallel.hpp"

namespace ptf {

RatVec ray_vector(const Subset& I) {
    RatVec r(I.n, Rat(0));
    if (!I.proper()) return r;  // r({}) = r([n]) = 0
    const int size = I.size();
    for (int v = 1; v <= I.n; ++v) r[v - 1] = I.contains(v) ? Rat(size - I.n) : Rat(size);
    return r;
}

RatMat linear_dependence(const std::vector<RatVec>& vectors) {
    if (vectors.empty()) return {};
    // transpose: dependences are the kernel over the coefficient space
    const std::size_t dim = vectors[0].size();
    RatMat t(dim, RatVec(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) t[j][i] = vectors[i][j];
    return kernel_basis(t);
}

void HPolytope::add(const Subset& I, const Rat& h) {
    if (!I.proper()) throw std::invalid_argument("inequality subset must be proper");
    ineqs.emplace_back(I, h);
}

void HPolytope::finalize() {
    std::sort(ineqs.begin(), ineqs.end(), [](const auto& a, const auto& b) {
        if (!(a.first == b.first)) return a.first < b.first;
        return a.second < b.second;
    });
    // an identical inequality twice is a construction bug; a repeated subset
    // with another height is legal input (one of the two is then redundant)
    for (std::size_t i = 1; i < ineqs.size(); ++i)
        if (ineqs[i].first == ineqs[i - 1].first && ineqs[i].second == ineqs[i - 1].second)
            throw std::invalid_argument("duplicate inequality");
}

namespace {

std::vector<std::vector<int>> combinations(int total, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > total) return out;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[i] == total - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

struct Rows {
    RatMat a;     // inequality normals
    RatVec rhs;   // heights
    RatVec ones;  // hyperplane row
};

Rows build_rows(const HPolytope& p) {
    Rows r;
    for (const auto& [I, h] : p.ineqs) {
        r.a.push_back(ray_vector(I));
        r.rhs.push_back(h);
    }
    r.ones.assign(p.n, Rat(1));
    return r;
}

// Nonzero recession ray of {x : sum x = level, a_i x <= rhs_i}, if any.
std::optional<RatVec> recession_ray(const HPolytope& p, const Rows& r) {
    const int n = p.n;
    auto feasible_dir = [&](const RatVec& v) {
        for (const RatVec& row : r.a)
            if (dot(row, v) > 0) return false;
        return true;
    };
    // lineality first
    {
        RatMat m;
        m.push_back(r.ones);
        for (const RatVec& row : r.a) m.push_back(row);
        const RatMat k = kernel_basis(m);
        if (!k.empty()) return k.front();
    }
    // extreme rays: n-2 tight inequalities inside the hyperplane
    const int total = static_cast<int>(r.a.size());
    for (const std::vector<int>& combo : combinations(total, n - 2)) {
        RatMat m;
        m.push_back(r.ones);
        for (int idx : combo) m.push_back(r.a[idx]);
        const RatMat k = kernel_basis(m);
        if (k.size() != 1) continue;
        const RatVec& v = k.front();
        if (feasible_dir(v)) return v;
        RatVec neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        if (feasible_dir(neg)) return neg;
    }
    return std::nullopt;
}

std::optional<RatVec> vertex_candidate(const HPolytope& p, const Rows& r,
                                       const std::vector<int>& combo) {
    RatMat m;
    RatVec b;
    m.push_back(r.ones);
    b.push_back(p.sum_level);
    for (int idx : combo) {
        m.push_back(r.a[idx]);
        b.push_back(r.rhs[idx]);
    }
    std::optional<RatVec> x = solve_unique(m, b);
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < r.a.size(); ++i)
        if (dot(r.a[i], *x) > r.rhs[i]) return std::nullopt;
    return x;
}

VPolytope sort_points(std::set<RatVec>&& pts) {
    VPolytope vp;
    vp.vertices.assign(pts.begin(), pts.end());
    return vp;
}

}  // namespace

VertexResult vertices(const HPolytope& p) {
    if (p.n < 2) throw std::invalid_argument("ambient size must be at least 2");
    const Rows r = build_rows(p);
    VertexResult res;
    if (std::optional<RatVec> ray = recession_ray(p, r)) {
        res.bounded = false;
        res.recession_ray = *ray;
        return res;
    }
    res.bounded = true;
    const std::vector<std::vector<int>> combos =
        combinations(static_cast<int>(r.a.size()), p.n - 1);
    std::vector<std::optional<RatVec>> found(combos.size());
    parallel_for(combos.size(), [&](std::size_t i) { found[i] = vertex_candidate(p, r, combos[i]); });
    std::set<RatVec> pts;
    for (std::optional<RatVec>& f : found)
        if (f) pts.insert(std::move(*f));
    res.poly = sort_points(std::move(pts));
    return res;
}

// Straight-line reference used by the tests and the benchmark to pin down
// the parallel kernel.
VertexResult vertices_serial(const HPolytope& p) {
    if (p.n < 2) throw std::invalid_argument("ambient size must be at least 2");
    const Rows r = build_rows(p);
    VertexResult res;
    if (std::optional<RatVec> ray = recession_ray(p, r)) {
        res.bounded = false;
        res.recession_ray = *ray;
        return res;
    }
    res.bounded = true;
    std::set<RatVec> pts;
    for (const std::vector<int>& combo : combinations(static_cast<int>(r.a.size()), p.n - 1))
        if (std::optional<RatVec> x = vertex_candidate(p, r, combo)) pts.insert(std::move(*x));
    res.poly = sort_points(std::move(pts));
    return res;
}

FacetResult irredundant_facets(const HPolytope& p, const VPolytope& vp) {
    FacetResult out;
    if (affine_dim(vp.vertices) < p.n - 1) {
        out.degenerate = true;
        return out;
    }
    for (std::size_t i = 0; i < p.ineqs.size(); ++i) {
        const RatVec normal = ray_vector(p.ineqs[i].first);
        std::vector<RatVec> tight;
        for (const RatVec& v : vp.vertices)
            if (dot(normal, v) == p.ineqs[i].second) tight.push_back(v);
        if (affine_dim(tight) == p.n - 2) out.facet_indices.push_back(i);
    }
    return out;
}

bool NormalPartition::all_single() const {
    for (const std::vector<int>& m : maximizers)
        if (m.size() != 1) return false;
    return true;
}

Partition NormalPartition::induced() const {
    Partition part;
    part.class_of.reserve(maximizers.size());
    for (const std::vector<int>& m : maximizers) part.class_of.push_back(m.empty() ? -1 : m[0]);
    part.canonicalize();
    return part;
}

NormalPartition normal_partition(const HPolytope& p, const VPolytope& vp, const PermTable& table) {
    // argmax vertex sets per proper subset, then intersect along prefixes
    std::map<std::uint32_t, std::vector<int>> argmax;
    for (const Subset& I : proper_subsets(p.n)) {
        const RatVec r = ray_vector(I);
        std::vector<int> best;
        Rat best_val;
        for (std::size_t v = 0; v < vp.vertices.size(); ++v) {
            const Rat val = dot(r, vp.vertices[v]);
            if (best.empty() || val > best_val) {
                best_val = val;
                best.assign(1, static_cast<int>(v));
            } else if (val == best_val) {
                best.push_back(static_cast<int>(v));
            }
        }
        argmax[I.bits] = std::move(best);
    }
    NormalPartition np;
    np.maximizers.resize(table.size());
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        std::vector<int> common;
        bool first = true;
        for (const Subset& I : chamber_rays(table[idx])) {
            const std::vector<int>& m = argmax.at(I.bits);
            if (first) {
                common = m;
                first = false;
            } else {
                std::vector<int> next;
                std::set_intersection(common.begin(), common.end(), m.begin(), m.end(),
                                      std::back_inserter(next));
                common = std::move(next);
            }
        }
        np.maximizers[idx] = std::move(common);
    }
    return np;
}

SubmodularityResult submodularity(const HeightFunction& h) {
    SubmodularityResult res;
    res.kind = Submodularity::Strict;
    bool weak_seen = false;
    for (std::uint32_t i = 1; i + 1 < (1u << h.n); ++i) {
        for (std::uint32_t j = i + 1; j + 1 < (1u << h.n); ++j) {
            if ((i & ~j) == 0 || (j & ~i) == 0) continue;  // comparable
            const Rat defect = h.values[i] + h.values[j] - h.values[i & j] - h.values[i | j];
            if (defect < 0) {
                res.kind = Submodularity::NotSubmodular;
                res.I = Subset(i, h.n);
                res.J = Subset(j, h.n);
                res.defect = defect;
                return res;
            }
            if (defect == 0 && !weak_seen) {
                weak_seen = true;
                res.I = Subset(i, h.n);
                res.J = Subset(j, h.n);
                res.defect = 0;
            }
        }
    }
    res.kind = weak_seen ? Submodularity::Weak : Submodularity::Strict;
    return res;
}

std::string RealizeWitness::describe() const {
    switch (kind) {
        case Kind::Unbounded:
            return "polytope is unbounded";
        case Kind::SplitChamber:
            return "chamber of permutation #" + std::to_string(perm_a) +
                   " is split across vertices";
        case Kind::DegenerateChamber:
            return "chamber of permutation #" + std::to_string(perm_a) +
                   " has several maximizing vertices";
        case Kind::MismatchedClasses:
            return "permutations #" + std::to_string(perm_a) + " and #" + std::to_string(perm_b) +
                   " disagree between fan classes and normal cones";
        case Kind::WallCrossingViolated:
        case Kind::EqualityViolated: {
            std::string s = (kind == Kind::WallCrossingViolated) ? "wall-crossing violated: "
                                                                 : "chamber equality violated: ";
            for (std::size_t k = 0; k < rays.size(); ++k) {
                if (k) s += " + ";
                s += "(" + rat_str(coefficients[k]) + ")*h(" + rays[k].digits() + ")";
            }
            s += " = " + rat_str(defect);
            return s;
        }
    }
    return "";
}

namespace {

// Ray sets of the glued chambers: fan rays that occur as a prefix of some
// permutation of the class.
std::vector<std::vector<Subset>> class_ray_sets(const Partition& classes,
                                                const std::vector<Subset>& fan_rays,
                                                const PermTable& table) {
    std::set<std::uint32_t> ray_bits;
    for (const Subset& I : fan_rays) ray_bits.insert(I.bits);
    std::vector<std::set<std::uint32_t>> acc(classes.num_classes);
    for (std::size_t idx = 0; idx < table.size(); ++idx)
        for (const Subset& I : chamber_rays(table[idx]))
            if (ray_bits.count(I.bits)) acc[classes.class_of[idx]].insert(I.bits);
    std::vector<std::vector<Subset>> out(classes.num_classes);
    const int n = table.n();
    for (int c = 0; c < classes.num_classes; ++c)
        for (std::uint32_t bits : acc[c]) out[c].emplace_back(bits, n);
    return out;
}

std::optional<RealizeWitness> wall_crossing_witness(const Partition& classes,
                                                    const std::vector<Subset>& fan_rays,
                                                    const HeightFunction& h,
                                                    const PermTable& table) {
    const std::vector<std::vector<Subset>> rays_of = class_ray_sets(classes, fan_rays, table);
    auto height = [&](const Subset& I) { return h.values[I.bits]; };
    // equality conditions inside every glued chamber
    for (int c = 0; c < classes.num_classes; ++c) {
        std::vector<RatVec> vecs;
        for (const Subset& I : rays_of[c]) vecs.push_back(ray_vector(I));
        for (const RatVec& dep : linear_dependence(vecs)) {
            Rat defect = 0;
            for (std::size_t k = 0; k < dep.size(); ++k) defect += dep[k] * height(rays_of[c][k]);
            if (defect != 0) {
                RealizeWitness w;
                w.kind = RealizeWitness::Kind::EqualityViolated;
                w.rays = rays_of[c];
                w.coefficients = dep;
                w.defect = defect;
                return w;
            }
        }
    }
    // wall-crossing conditions across adjacent glued chambers
    std::set<std::pair<int, int>> adjacent;
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        const Permutation& p = table[idx];
        for (int k = 1; k < table.n(); ++k) {
            if (p.at(k) > p.at(k + 1)) continue;
            const int a = classes.class_of[idx];
            const int b = classes.class_of[table.index_of(p.adjacent_swap(k))];
            if (a != b) adjacent.insert({std::min(a, b), std::max(a, b)});
        }
    }
    for (const auto& [x, y] : adjacent) {
        std::vector<Subset> only_x, only_y, common;
        for (const Subset& I : rays_of[x]) {
            const bool shared =
                std::find(rays_of[y].begin(), rays_of[y].end(), I) != rays_of[y].end();
            (shared ? common : only_x).push_back(I);
        }
        for (const Subset& I : rays_of[y])
            if (std::find(rays_of[x].begin(), rays_of[x].end(), I) == rays_of[x].end())
                only_y.push_back(I);
        for (const Subset& I : only_x) {
            for (const Subset& J : only_y) {
                std::vector<Subset> support{I, J};
                support.insert(support.end(), common.begin(), common.end());
                std::vector<RatVec> vecs;
                for (const Subset& S : support) vecs.push_back(ray_vector(S));
                const RatMat deps = linear_dependence(vecs);
                if (deps.size() != 1) continue;
                RatVec c = deps.front();
                if (c[0] == 0 || c[1] == 0) continue;
                if ((c[0] > 0) != (c[1] > 0)) continue;  // need alpha, beta > 0
                const Rat scale = Rat(2) / (c[0] + c[1]);
                for (Rat& v : c) v *= scale;
                Rat defect = 0;
                for (std::size_t k = 0; k < support.size(); ++k) defect += c[k] * height(support[k]);
                if (defect <= 0) {
                    RealizeWitness w;
                    w.kind = RealizeWitness::Kind::WallCrossingViolated;
                    w.rays = support;
                    w.coefficients = c;
                    w.defect = defect;
                    return w;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

RealizeResult check_realizes(const Partition& fan_classes, const std::vector<Subset>& fan_rays,
                             const HeightFunction& h, const PermTable& table,
                             const Rat& sum_level) {
    RealizeResult res;
    HPolytope p;
    p.n = table.n();
    p.sum_level = sum_level;
    for (const Subset& I : fan_rays) p.add(I, h.values[I.bits]);
    p.finalize();
    const VertexResult vr = vertices(p);
    if (!vr.bounded) {
        RealizeWitness w;
        w.kind = RealizeWitness::Kind::Unbounded;
        res.witness = w;
        return res;
    }
    const NormalPartition np = normal_partition(p, vr.poly, table);
    for (std::size_t idx = 0; idx < np.maximizers.size(); ++idx) {
        if (np.maximizers[idx].size() == 1) continue;
        RealizeWitness w;
        w.kind = np.maximizers[idx].empty() ? RealizeWitness::Kind::SplitChamber
                                            : RealizeWitness::Kind::DegenerateChamber;
        w.perm_a = idx;
        if (std::optional<RealizeWitness> wall =
                wall_crossing_witness(fan_classes, fan_rays, h, table))
            w = *wall;
        res.witness = w;
        return res;
    }
    Partition induced = np.induced();
    Partition target = fan_classes;
    target.canonicalize();
    if (induced == target) {
        res.ok = true;
        return res;
    }
    if (std::optional<RealizeWitness> wall = wall_crossing_witness(fan_classes, fan_rays, h, table)) {
        res.witness = wall;
        return res;
    }
    for (std::size_t a = 0; a < table.size(); ++a) {
        for (std::size_t b = a + 1; b < table.size(); ++b) {
            const bool same_fan = target.class_of[a] == target.class_of[b];
            const bool same_poly = induced.class_of[a] == induced.class_of[b];
            if (same_fan != same_poly) {
                RealizeWitness w;
                w.kind = RealizeWitness::Kind::MismatchedClasses;
                w.perm_a = a;
                w.perm_b = b;
                res.witness = w;
                return res;
            }
        }
    }
    RealizeWitness w;  // unreachable if partitions differ, kept for safety
    res.witness = w;
    return res;
}

QPolytopeResult q_polytope(const std::vector<Subset>& rays, const RatMat& K, const RatVec& u) {
    QPolytopeResult res;
    const std::size_t N = rays.size();
    if (N == 0 || K.empty()) {
        res.error = "empty system";
        return res;
    }
    const int n = rays.front().n;
    const std::size_t rows = K.size();
    if (rows != N - static_cast<std::size_t>(n - 1)) {
        res.error = "facet count does not match the simplicial contract rows = N - (n-1)";
        return res;
    }
    if (u.size() != rows) {
        res.error = "right-hand side size mismatch";
        return res;
    }
    for (const Rat& x : u)
        if (x <= 0) {
            res.error = "u must be positive";
            return res;
        }
    if (rank(K) != static_cast<int>(rows)) {
        res.error = "facet normals are not independent";
        return res;
    }
    // recession directions {z >= 0, Kz = 0} would make the slice unbounded:
    // look for basic feasible points of {Kz = 0, sum z = 1, z >= 0}
    {
        RatMat ext = K;
        ext.emplace_back(N, Rat(1));
        RatVec rhs(rows, Rat(0));
        rhs.push_back(Rat(1));
        const int basis_size = rank(ext);
        for (const std::vector<int>& combo : combinations(static_cast<int>(N), basis_size)) {
            RatMat sub(ext.size(), RatVec(combo.size()));
            for (std::size_t r = 0; r < ext.size(); ++r)
                for (std::size_t c = 0; c < combo.size(); ++c) sub[r][c] = ext[r][combo[c]];
            std::optional<RatVec> sol = solve_unique(sub, rhs);
            if (!sol) continue;
            bool nonneg = true;
            for (const Rat& x : *sol)
                if (x < 0) {
                    nonneg = false;
                    break;
                }
            if (nonneg) {
                res.error = "slice is unbounded";
                return res;
            }
        }
    }
    std::set<RatVec> pts;
    for (const std::vector<int>& combo : combinations(static_cast<int>(N),
                                                      static_cast<int>(rows))) {
        RatMat sub(rows, RatVec(combo.size()));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < combo.size(); ++c) sub[r][c] = K[r][combo[c]];
        std::optional<RatVec> sol = solve_unique(sub, u);
        if (!sol) continue;
        bool nonneg = true;
        for (const Rat& x : *sol)
            if (x < 0) {
                nonneg = false;
                break;
            }
        if (!nonneg) continue;
        RatVec z(N, Rat(0));
        for (std::size_t c = 0; c < combo.size(); ++c) z[combo[c]] = (*sol)[c];
        pts.insert(std::move(z));
    }
    res.ok = true;
    res.poly.vertices.assign(pts.begin(), pts.end());
    return res;
}

}  // namespace ptf
