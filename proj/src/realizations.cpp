#include "ptf/realizations.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace ptf {

Rat h_perm(const Subset& I) {
    if (!I.proper()) return Rat(0);
    const long n = I.n, k = I.size();
    return rat(n * k * (n - k), 2);
}

HeightFunction permutahedron_heights(int n) {
    HeightFunction h(n);
    for (std::uint32_t bits = 1; bits + 1 < (1u << n); ++bits) {
        const Subset I(bits, n);
        h[I] = h_perm(I);
    }
    return h;
}

HPolytope removahedron(int n, const std::vector<Subset>& rays) {
    HPolytope p;
    p.n = n;
    p.sum_level = rat(static_cast<long>(n) * (n + 1), 2);
    for (const Subset& I : rays) p.add(I, h_perm(I));
    p.finalize();
    return p;
}

RemovahedralResult is_removahedral(const Congruence& c, const PermTable& table) {
    if (!c.essential)
        throw std::invalid_argument("removahedrality is decided on essential congruences");
    RemovahedralResult res;
    res.fan_rays = quotient_fan_rays(c.ideal);
    res.realization = check_realizes(c.classes, res.fan_rays, permutahedron_heights(c.ideal.n),
                                     table, rat(static_cast<long>(c.ideal.n) * (c.ideal.n + 1), 2));
    res.removahedral = res.realization.ok;
    return res;
}

Rat wall_crossing_defect(int n, int i, int j) {
    if (!(1 <= i && i <= j - 3 && j <= n)) throw std::out_of_range("need 1 <= i <= j-3, j <= n");
    const Rat closed(static_cast<long>(n) * i * (j - n) + static_cast<long>(n) * (1 - i));
    // direct evaluation over the five interval families
    const Subset I = Subset::interval(i + 2, j - 1, n);
    const Subset J = Subset::interval(i + 1, j - 2, n);
    const Subset K = Subset::interval(1, j - 1, n);
    const Subset L = Subset::interval(i + 1, n, n);
    const Subset M = Subset::interval(i + 2, j - 2, n);
    const Rat direct = h_perm(I) + h_perm(J) - h_perm(K) - h_perm(L) - h_perm(M);
    if (direct != closed) throw std::logic_error("defect formula mismatch");
    return closed;
}

PermutreehedronResult permutreehedron(const Decoration& d, const PermTable& table) {
    PermutreehedronResult res;
    res.rays = permutree_rays(d);
    std::set<RatVec> pts;
    for (const Permutree& t : enumerate_permutrees(d, table).trees)
        pts.insert(vertex_coordinates(t));
    res.v_form.vertices.assign(pts.begin(), pts.end());
    res.h_form = removahedron(d.n(), res.rays);
    const VertexResult vr = vertices(res.h_form);
    if (vr.bounded) res.h_vertices = vr.poly;
    res.agree = vr.bounded && res.h_vertices == res.v_form;
    return res;
}

SubmodularRealization realize_from_submodular(const Decoration& d, const HeightFunction& h,
                                              const PermTable& table) {
    SubmodularRealization out;
    out.submodular = submodularity(h);
    if (out.submodular.kind != Submodularity::Strict) return out;
    out.accepted = true;
    const Congruence cong = congruence_classes(permutree_ideal(d), table);
    out.realization = check_realizes(cong.classes, permutree_rays(d), h, table);
    return out;
}

HeightFunction random_strictly_submodular(int n, std::uint64_t seed) {
    // h_perm plus a perturbation in [0, 1/2]: the permutahedron defect is at
    // least 2n while the perturbation defect stays above -1.
    std::mt19937_64 rng(seed);
    HeightFunction h(n);
    for (std::uint32_t bits = 1; bits + 1 < (1u << n); ++bits) {
        const Subset I(bits, n);
        h[I] = h_perm(I) + rat(static_cast<long>(rng() % 501), 1000);
    }
    return h;
}

HeightFunction random_modular(int n, std::uint64_t seed) {
    // h(I) = <x0, r(I)> for a random integer point x0: every defect is zero.
    std::mt19937_64 rng(seed);
    RatVec x0(n);
    for (int k = 0; k < n; ++k) x0[k] = Rat(static_cast<long>(rng() % 41) - 20);
    HeightFunction h(n);
    for (std::uint32_t bits = 1; bits + 1 < (1u << n); ++bits) {
        const Subset I(bits, n);
        h[I] = dot(x0, ray_vector(I));
    }
    return h;
}

// ---- kinematic realizations ---------------------------------------------

namespace {

std::vector<std::pair<int, int>> f_delta(const Decoration& d) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i < d.n(); ++i)
        for (int j = i + 1; j <= d.n(); ++j) {
            bool ok = true;
            for (int k = i + 1; k < j && ok; ++k)
                if (d.at(k) == 'x') ok = false;
            if (ok) out.emplace_back(i, j);
        }
    return out;
}

bool in_eps(const Decoration& d, int k, int eps) {
    if (k < 1 || k > d.n()) return false;
    return eps > 0 ? d.in_plus(k) : d.in_minus(k);
}

}  // namespace

int kinematic_p(const Decoration& d, int i, int j, int eps) {
    if (!in_eps(d, i, eps)) return i - 1;
    int m = j;
    for (int k = i + 1; k < j; ++k)
        if (in_eps(d, k, eps)) {
            m = k;
            break;
        }
    return m - 1;
}

int kinematic_q(const Decoration& d, int i, int j, int eps) {
    if (!in_eps(d, j, eps)) return j + 1;
    int m = i;
    for (int k = j - 1; k > i; --k)
        if (in_eps(d, k, eps)) {
            m = k;
            break;
        }
    return m + 1;
}

Subset kinematic_subset(const Decoration& d, const std::vector<std::pair<int, int>>& fd,
                        int l, int p, int q, int r) {
    const int n = d.n();
    const bool in_fd =
        p >= 1 && q <= n && p < q &&
        std::find(fd.begin(), fd.end(), std::make_pair(p, q)) != fd.end();
    if (!in_fd) return (l == 1 && r == 1) ? Subset::full(n) : Subset::empty(n);
    if (p + 1 == q) {
        if (l == 0 && r == 0) return Subset::empty(n);
        if (l == 1 && r == 1) return Subset::full(n);
        if (l == 1) return Subset::interval(1, p, n);
        return Subset::interval(q, n, n);
    }
    // p + 1 < q: the middle letters decide membership, then the runs follow.
    Subset R(0, n);
    for (int k = p + 1; k < q; ++k)
        if (d.in_minus(k)) R.bits |= 1u << (k - 1);
    if (!R.contains(p + 1)) R.bits |= Subset::interval(1, p, n).bits;
    if (!R.contains(q - 1)) R.bits |= Subset::interval(q, n, n).bits;
    return R;
}

KinematicSystem kinematic_system(const Decoration& d) {
    const int n = d.n();
    if (n < 2) throw std::invalid_argument("kinematic construction needs n >= 2");
    for (char c : d.letters)
        if (c == 'o') throw std::invalid_argument("kinematic decorations use letters d, u, x only");
    if (d.at(1) != 'x' || d.at(n) != 'x')
        throw std::invalid_argument("kinematic decorations must start and end with x");
    KinematicSystem sys;
    sys.deco = d;
    sys.index_pairs = f_delta(d);
    // reduced coordinates: every proper subset reachable from the index space
    std::set<Subset> vars;
    for (int l = 0; l <= 1; ++l)
        for (int p = 1; p <= n; ++p)
            for (int q = 1; q <= n; ++q)
                for (int r = 0; r <= 1; ++r) {
                    const Subset R = kinematic_subset(d, sys.index_pairs, l, p, q, r);
                    if (R.proper()) vars.insert(R);
                }
    sys.variables.assign(vars.begin(), vars.end());
    std::map<std::uint32_t, std::size_t> index;
    for (std::size_t k = 0; k < sys.variables.size(); ++k) index[sys.variables[k].bits] = k;
    auto add_term = [&](RatVec& row, int l, int p, int q, int r, int sign) {
        const Subset R = kinematic_subset(d, sys.index_pairs, l, p, q, r);
        if (!R.proper()) return;  // pinned to zero
        row[index.at(R.bits)] += sign;
    };
    for (const auto& [i, j] : sys.index_pairs) {
        RatVec row(sys.variables.size(), Rat(0));
        add_term(row, 1, kinematic_p(d, i, j, +1), kinematic_q(d, i, j, -1), 0, +1);
        add_term(row, 0, kinematic_p(d, i, j, -1), kinematic_q(d, i, j, +1), 1, +1);
        add_term(row, d.in_minus(i) ? 0 : 1, kinematic_p(d, i, j + 1, -1),
                 kinematic_q(d, i - 1, j, -1), d.in_minus(j) ? 0 : 1, -1);
        add_term(row, d.in_plus(i) ? 1 : 0, kinematic_p(d, i, j + 1, +1),
                 kinematic_q(d, i - 1, j, +1), d.in_plus(j) ? 1 : 0, -1);
        sys.equalities.push_back(std::move(row));
    }
    return sys;
}

QPolytopeResult kinematic_polytope(const Decoration& d, const RatVec& u) {
    const KinematicSystem sys = kinematic_system(d);
    return q_polytope(sys.variables, sys.equalities, u);
}

RatMat typecone_facet_normals(const Decoration& d, const std::vector<Subset>& rays) {
    std::map<std::uint32_t, std::size_t> index;
    for (std::size_t k = 0; k < rays.size(); ++k) index[rays[k].bits] = k;
    RatMat K;
    for (const ExchangeablePair& f : typecone_facets(d)) {
        RatVec row(rays.size(), Rat(0));
        row[index.at(f.I.bits)] += 1;
        row[index.at(f.J.bits)] += 1;
        const Subset inter = f.I.set_intersection(f.J), uni = f.I.set_union(f.J);
        if (!inter.is_empty()) row[index.at(inter.bits)] -= 1;
        if (!uni.is_full()) row[index.at(uni.bits)] -= 1;
        K.push_back(std::move(row));
    }
    return K;
}

QPolytopeResult simplicial_q_polytope(const Decoration& d, const RatVec& u) {
    if (!is_simplicial(d)) {
        QPolytopeResult res;
        res.error = "type cone is not simplicial";
        return res;
    }
    const std::vector<Subset> rays = canonical_ray_order(permutree_rays(d));
    return q_polytope(rays, typecone_facet_normals(d, rays), u);
}

}  // namespace ptf
