#include "ptf/io.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "ptf/typecone.hpp"

namespace ptf::io {

json to_json(const Permutation& p) {
    json arr = json::array();
    for (int v : p.word) arr.push_back(v);
    return arr;
}

Permutation permutation_from_json(const json& j) {
    std::vector<int> w;
    for (const auto& v : j) w.push_back(v.get<int>());
    return Permutation(std::move(w));
}

json to_json(const Subset& s) {
    json arr = json::array();
    for (int v : s.members()) arr.push_back(v);
    return arr;
}

Subset subset_from_json(const json& j, int n) {
    Subset s(0, n);
    for (const auto& v : j) {
        const int x = v.get<int>();
        if (x < 1 || x > n) throw std::invalid_argument("subset element out of range");
        s.bits |= 1u << (x - 1);
    }
    return s;
}

json to_json(const Shard& s) {
    json out;
    out["i"] = s.i;
    out["j"] = s.j;
    out["s"] = to_json(s.s_as_subset());
    return out;
}

Shard shard_from_json(const json& j, int n) {
    const int i = j.at("i").get<int>(), k = j.at("j").get<int>();
    const Subset s = subset_from_json(j.at("s"), n);
    Shard sh(i, k, s.bits, n);
    if (!(1 <= i && i < k && k <= n) || (s.bits & ~sh.open_interval_bits()))
        throw std::invalid_argument("malformed shard");
    return sh;
}

json to_json(const ShardIdeal& ideal) {
    json out;
    out["n"] = ideal.n;
    json arr = json::array();
    for (const Shard& s : ideal.shards) arr.push_back(to_json(s));
    out["shards"] = arr;
    return out;
}

ShardIdeal ideal_from_json(const json& j) {
    const int n = j.at("n").get<int>();
    std::vector<Shard> shards;
    for (const auto& s : j.at("shards")) shards.push_back(shard_from_json(s, n));
    auto res = validate_ideal(n, std::move(shards));
    if (std::holds_alternative<NotUpwardClosed>(res)) {
        const auto& w = std::get<NotUpwardClosed>(res);
        throw std::invalid_argument("not an upper ideal: " + w.missing.label() + " forces " +
                                    w.member.label() + " but is missing");
    }
    return std::get<ShardIdeal>(res);
}

namespace {

std::string side_name(bool split, int node, int other) {
    if (!split) return "only";
    return other < node ? "left" : "right";
}

}  // namespace

json to_json(const Permutree& t) {
    json out;
    out["n"] = t.n;
    out["decoration"] = t.deco.letters;
    json arr = json::array();
    for (const auto& [f, to] : t.edges) {
        json e;
        e["from"] = f;
        e["to"] = to;
        e["parent_side"] = side_name(t.deco.in_plus(f), f, to);
        e["child_side"] = side_name(t.deco.in_minus(to), to, f);
        arr.push_back(e);
    }
    out["edges"] = arr;
    return out;
}

Permutree permutree_from_json(const json& j, const Decoration& d) {
    Permutree t;
    t.n = j.at("n").get<int>();
    t.deco = d;
    for (const auto& e : j.at("edges")) {
        const int f = e.at("from").get<int>(), to = e.at("to").get<int>();
        t.edges.emplace_back(f, to);
        if (e.contains("parent_side") &&
            e["parent_side"].get<std::string>() != side_name(d.in_plus(f), f, to))
            throw std::invalid_argument("parent_side tag inconsistent with values");
        if (e.contains("child_side") &&
            e["child_side"].get<std::string>() != side_name(d.in_minus(to), to, f))
            throw std::invalid_argument("child_side tag inconsistent with values");
    }
    t.sort_edges();
    const TreeCheck chk = validate(t);
    if (!chk.ok) throw std::invalid_argument("invalid permutree: " + chk.diagnostic);
    return t;
}

json to_json(const HPolytope& p) {
    json out;
    out["n"] = p.n;
    out["sum_level"] = rat_str(p.sum_level);
    json arr = json::array();
    for (const auto& [I, h] : p.ineqs) {
        json e;
        e["set"] = to_json(I);
        e["h"] = rat_str(h);
        arr.push_back(e);
    }
    out["ineqs"] = arr;
    return out;
}

HPolytope hpolytope_from_json(const json& j) {
    HPolytope p;
    p.n = j.at("n").get<int>();
    p.sum_level = rat_parse(j.at("sum_level").get<std::string>());
    for (const auto& e : j.at("ineqs"))
        p.add(subset_from_json(e.at("set"), p.n), rat_parse(e.at("h").get<std::string>()));
    p.finalize();
    return p;
}

json to_json(const VPolytope& p, int) {
    json out;
    json arr = json::array();
    for (const RatVec& v : p.vertices) {
        json row = json::array();
        for (const Rat& x : v) row.push_back(rat_str(x));
        arr.push_back(row);
    }
    out["vertices"] = arr;
    return out;
}

VPolytope vpolytope_from_json(const json& j) {
    VPolytope p;
    for (const auto& row : j.at("vertices")) {
        RatVec v;
        for (const auto& x : row) v.push_back(rat_parse(x.get<std::string>()));
        p.vertices.push_back(std::move(v));
    }
    std::sort(p.vertices.begin(), p.vertices.end());
    return p;
}

std::string counts_csv(int n) {
    std::ostringstream out;
    out << "decoration,rho,chi,phi,simplicial\n";
    for (const Decoration& d : all_decorations(n))
        out << d.letters << "," << rho(d) << "," << chi(d) << "," << phi(d) << ","
            << (is_simplicial(d) ? "true" : "false") << "\n";
    return out.str();
}

// ---- OFF export ----------------------------------------------------------

namespace {

std::optional<std::string> exact_decimal(const Rat& q) {
    mpz_class den = q.get_den();
    int twos = 0, fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1) return std::nullopt;
    const int k = std::max(twos, fives);
    mpz_class scale = 1;
    for (int t = 0; t < k; ++t) scale *= 10;
    mpz_class num = q.get_num() * (scale / q.get_den());
    const bool neg = num < 0;
    if (neg) num = -num;
    std::string digits = num.get_str();
    if (k == 0) return (neg ? "-" : "") + digits;
    while (static_cast<int>(digits.size()) <= k) digits.insert(digits.begin(), '0');
    digits.insert(digits.end() - k, '.');
    return (neg ? "-" : "") + digits;
}

using Vec3 = std::array<Rat, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rat dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 sub(const Vec3& a, const Vec3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

// Cyclic order of coplanar points around their centroid, exact comparisons.
std::vector<int> cycle_order(const std::vector<Vec3>& pts, const std::vector<int>& idx,
                             const Vec3& normal) {
    Vec3 c{Rat(0), Rat(0), Rat(0)};
    for (int i : idx)
        for (int k = 0; k < 3; ++k) c[k] += pts[i][k];
    for (int k = 0; k < 3; ++k) c[k] /= static_cast<long>(idx.size());
    const Vec3 ref = sub(pts[idx[0]], c);
    auto half = [&](const Vec3& d) {
        const Rat s = dot3(cross(ref, d), normal);
        if (s > 0) return 0;
        if (s < 0) return 1;
        return dot3(ref, d) > 0 ? 0 : 1;
    };
    std::vector<int> order = idx;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Vec3 da = sub(pts[a], c), db = sub(pts[b], c);
        const int ha = half(da), hb = half(db);
        if (ha != hb) return ha < hb;
        return dot3(cross(da, db), normal) > 0;
    });
    return order;
}

}  // namespace

std::string to_off(const VPolytope& vp, const HPolytope& facets_of) {
    const int n = facets_of.n;
    if (n > 4) throw std::invalid_argument("OFF export covers ambient size up to 4");
    if (vp.vertices.empty()) throw std::invalid_argument("empty polytope");
    std::vector<Vec3> pts;
    for (const RatVec& v : vp.vertices) {
        Vec3 p{Rat(0), Rat(0), Rat(0)};
        for (int k = 0; k < std::min(n - 1, 3); ++k) p[k] = v[k];
        pts.push_back(p);
    }
    const int dim = affine_dim(vp.vertices);
    std::vector<std::vector<int>> faces;
    if (dim <= 1) {
        std::vector<int> all(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
        faces.push_back(all);
    } else if (dim == 2) {
        std::vector<int> all(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
        Vec3 normal{Rat(0), Rat(0), Rat(0)};
        for (std::size_t a = 1; a < pts.size() && is_zero_vec({normal[0], normal[1], normal[2]});
             ++a)
            for (std::size_t b = a + 1; b < pts.size(); ++b) {
                normal = cross(sub(pts[a], pts[0]), sub(pts[b], pts[0]));
                if (!is_zero_vec({normal[0], normal[1], normal[2]})) break;
            }
        faces.push_back(cycle_order(pts, all, normal));
    } else {
        const FacetResult fr = irredundant_facets(facets_of, vp);
        if (fr.degenerate) throw std::invalid_argument("degenerate polytope");
        for (std::size_t fi : fr.facet_indices) {
            const RatVec normal_n = ray_vector(facets_of.ineqs[fi].first);
            std::vector<int> tight;
            for (std::size_t v = 0; v < vp.vertices.size(); ++v)
                if (dot(normal_n, vp.vertices[v]) == facets_of.ineqs[fi].second)
                    tight.push_back(static_cast<int>(v));
            // projected facet normal: cross product of two edge directions
            Vec3 nrm{Rat(0), Rat(0), Rat(0)};
            for (std::size_t a = 1; a < tight.size(); ++a) {
                for (std::size_t b = a + 1; b < tight.size(); ++b) {
                    nrm = cross(sub(pts[tight[a]], pts[tight[0]]),
                                sub(pts[tight[b]], pts[tight[0]]));
                    if (!is_zero_vec({nrm[0], nrm[1], nrm[2]})) break;
                }
                if (!is_zero_vec({nrm[0], nrm[1], nrm[2]})) break;
            }
            faces.push_back(cycle_order(pts, tight, nrm));
        }
    }
    bool rounded = false;
    auto coord = [&](const Rat& q) {
        if (std::optional<std::string> d = exact_decimal(q)) return *d;
        rounded = true;
        std::ostringstream os;
        os.precision(12);
        os << q.get_d();
        return os.str();
    };
    std::ostringstream body;
    body << pts.size() << " " << faces.size() << " 0\n";
    for (const Vec3& p : pts)
        body << coord(p[0]) << " " << coord(p[1]) << " " << coord(p[2]) << "\n";
    for (const std::vector<int>& f : faces) {
        body << f.size();
        for (int v : f) body << " " << v;
        body << "\n";
    }
    std::string head = "OFF\n";
    if (rounded) head += "# display_only: true\n";
    return head + body.str();
}

}  // namespace ptf::io
