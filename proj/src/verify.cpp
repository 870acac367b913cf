#include "ptf/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ptf/realizations.hpp"

namespace ptf::verify {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    bool pass = true;
    std::string first_failure;
    long checks = 0;

    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond && pass) {
            pass = false;
            first_failure = what;
        }
    }
};

const PermTable& table_for(int n) {
    static std::map<int, PermTable> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, PermTable(n)).first;
    return it->second;
}

std::vector<Decoration> middles(int n) {
    std::set<std::string> seen;
    std::vector<Decoration> out;
    for (const Decoration& d : all_decorations(n)) {
        const Decoration m = middle_canonical(d);
        if (seen.insert(m.letters).second) out.push_back(m);
    }
    return out;
}

std::string join_ray_list(const std::vector<Subset>& rays) {
    std::string out;
    for (const Subset& I : rays) {
        if (!out.empty()) out += ", ";
        out += I.digits();
    }
    return out;
}

std::string join_pair_list(const std::vector<ExchangeablePair>& pairs) {
    std::string out;
    for (const ExchangeablePair& p : pairs) {
        if (!out.empty()) out += ", ";
        out += p.label();
    }
    return out;
}

Outcome finish(const std::string& name, Checker& c, io::json report, Clock::time_point start) {
    Outcome o;
    o.name = name;
    o.pass = c.pass;
    o.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    report["checks"] = c.checks;
    report["pass"] = c.pass;
    if (!c.pass) report["first_failure"] = c.first_failure;
    o.report = std::move(report);
    o.detail = c.pass ? (std::to_string(c.checks) + " checks")
                      : ("failed: " + c.first_failure);
    return o;
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long t = 1; t <= k; ++t) r = r * (n - t + 1) / t;
    return r;
}

}  // namespace

Outcome paper_table() {
    const auto start = Clock::now();
    Checker c;
    io::json report;

    struct Expected {
        const char* deco;
        long rho_v, chi_v, phi_v;
        const char* rays;
        const char* pairs;
        const char* facets;
    };
    const Expected cases[] = {
        {"oodo", 11, 19, 12, "1, 2, 3, 4, 12, 13, 23, 34, 123, 134, 234",
         "{1, 2}, {1, 3}, {1, 34}, {12, 13}, {12, 134}, {12, 23}, {12, 234}, {123, 134}, "
         "{123, 234}, {123, 4}, {13, 23}, {13, 34}, {13, 4}, {134, 234}, {2, 3}, {2, 34}, "
         "{23, 34}, {23, 4}, {3, 4}",
         "{1, 2}, {1, 3}, {12, 13}, {12, 23}, {123, 134}, {123, 234}, {13, 23}, {13, 34}, "
         "{134, 234}, {2, 3}, {23, 34}, {3, 4}"},
        {"oxuo", 7, 6, 4, "1, 4, 12, 34, 123, 124, 234",
         "{1, 234}, {12, 34}, {12, 4}, {123, 124}, {123, 4}, {124, 34}",
         "{1, 234}, {12, 4}, {123, 124}, {124, 34}"},
    };
    for (const Expected& e : cases) {
        const Decoration d(e.deco);
        c.expect(rho(d) == e.rho_v, std::string(e.deco) + ": rho");
        c.expect(chi(d) == e.chi_v, std::string(e.deco) + ": chi");
        c.expect(phi(d) == e.phi_v, std::string(e.deco) + ": phi");
        const std::string rays = join_ray_list(canonical_ray_order(permutree_rays(d)));
        const std::string pairs = join_pair_list(exchangeable_pairs(d));
        const std::string facets = join_pair_list(typecone_facets(d));
        c.expect(rays == e.rays, std::string(e.deco) + ": ray list\n got: " + rays);
        c.expect(pairs == e.pairs, std::string(e.deco) + ": pair list\n got: " + pairs);
        c.expect(facets == e.facets, std::string(e.deco) + ": facet list\n got: " + facets);
        io::json entry;
        entry["decoration"] = e.deco;
        entry["rho"] = rho(d);
        entry["chi"] = chi(d);
        entry["phi"] = phi(d);
        entry["rays"] = rays;
        entry["exchangeable_pairs"] = pairs;
        entry["typecone_facets"] = facets;
        report["tables"].push_back(entry);
    }
    Outcome o = finish("paper-table", c, std::move(report), start);
    if (o.seconds >= 1.0) {
        o.pass = false;
        o.detail += " (runtime budget of 1 s exceeded)";
    }
    return o;
}

Outcome closed_forms(int max_n) {
    const auto start = Clock::now();
    Checker c;
    io::json report;
    for (int n = 1; n <= max_n; ++n) {
        const Decoration o_n(std::string(n, 'o')), d_n(std::string(n, 'd')),
            x_n(std::string(n, 'x'));
        const long pairs2 = binom(n, 2);
        const long pow_half = n >= 2 ? (1L << (n - 2)) : 0;  // times pairs2 = 0 for n = 1
        c.expect(rho(o_n) == (1L << n) - 2, "rho(o^n), n=" + std::to_string(n));
        c.expect(rho(d_n) == binom(n + 1, 2) - 1, "rho(d^n), n=" + std::to_string(n));
        c.expect(rho(x_n) == 2L * n - 2, "rho(x^n), n=" + std::to_string(n));
        c.expect(chi(o_n) == pow_half * pairs2, "chi(o^n), n=" + std::to_string(n));
        c.expect(chi(d_n) == binom(n + 2, 4), "chi(d^n), n=" + std::to_string(n));
        c.expect(chi(x_n) == n - 1, "chi(x^n), n=" + std::to_string(n));
        c.expect(phi(o_n) == pow_half * pairs2, "phi(o^n), n=" + std::to_string(n));
        c.expect(phi(d_n) == pairs2, "phi(d^n), n=" + std::to_string(n));
        c.expect(phi(x_n) == n - 1, "phi(x^n), n=" + std::to_string(n));
        // enumerated rays agree with the counting formula
        for (const Decoration* d : {&o_n, &d_n, &x_n})
            c.expect(static_cast<long>(permutree_rays(*d).size()) == rho(*d),
                     "ray enumeration vs rho, n=" + std::to_string(n));
    }
    report["max_n"] = max_n;
    Outcome o = finish("closed-forms", c, std::move(report), start);
    if (o.seconds >= 5.0) {
        o.pass = false;
        o.detail += " (runtime budget of 5 s exceeded)";
    }
    return o;
}

Outcome typecone_oracle(int max_n) {
    const auto start = Clock::now();
    Checker c;
    io::json report;
    long oracle_runs = 0;
    for (int n = 1; n <= max_n; ++n) {
        std::map<std::string, std::vector<ExchangeablePair>> oracle_cache;
        for (const Decoration& m : middles(n)) {
            oracle_cache[m.letters] = facet_oracle(m);
            ++oracle_runs;
        }
        for (const Decoration& d : all_decorations(n)) {
            const Decoration m = middle_canonical(d);
            // boundary letters are irrelevant to rays and pairs; the oracle
            // output for the middle therefore applies verbatim
            c.expect(permutree_rays(d) == permutree_rays(m),
                     d.letters + ": rays differ from middle canonical form");
            c.expect(exchangeable_pairs(d) == exchangeable_pairs(m),
                     d.letters + ": pairs differ from middle canonical form");
            const std::vector<ExchangeablePair> facets = typecone_facets(d);
            c.expect(oracle_cache.at(m.letters) == facets, d.letters + ": oracle != facets");
            c.expect(static_cast<long>(facets.size()) == phi(d), d.letters + ": |facets| != phi");
            c.expect(static_cast<long>(exchangeable_pairs(d).size()) == chi(d),
                     d.letters + ": |pairs| != chi");
        }
    }
    report["max_n"] = max_n;
    report["oracle_runs"] = oracle_runs;
    return finish("typecone-oracle", c, std::move(report), start);
}

Outcome rays_oracle(int max_n) {
    const auto start = Clock::now();
    Checker c;
    io::json report;
    for (int n = 2; n <= max_n; ++n) {
        for (const Subset& I : proper_subsets(n))
            c.expect(static_cast<int>(shards_through_ray(I).size()) == n - 2,
                     "|Sigma_I| != n-2 at I=" + I.digits());
        std::map<std::string, std::vector<Subset>> cache;
        for (const Decoration& m : middles(n))
            cache[m.letters] = quotient_fan_rays(permutree_ideal(m));
        for (const Decoration& d : all_decorations(n)) {
            c.expect(permutree_ideal(d) == permutree_ideal(middle_canonical(d)),
                     d.letters + ": ideal differs from middle canonical form");
            std::vector<Subset> direct = permutree_rays(d);
            std::sort(direct.begin(), direct.end());
            std::vector<Subset> from_ideal = cache.at(middle_canonical(d).letters);
            std::sort(from_ideal.begin(), from_ideal.end());
            c.expect(direct == from_ideal, d.letters + ": ray characterization != shard oracle");
        }
    }
    report["max_n"] = max_n;
    return finish("rays-oracle", c, std::move(report), start);
}

Outcome removahedral_sweep() {
    const auto start = Clock::now();
    Checker c;
    io::json report;
    const int n = 4;
    const PermTable& table = table_for(n);
    const std::vector<ShardIdeal> ideals = enumerate_upper_ideals(n);
    report["upper_ideals"] = ideals.size();
    // the sixteen permutree ideals over the interior letters
    std::set<std::vector<Shard>> permutree_ideals;
    for (const Decoration& m : middles(n)) permutree_ideals.insert(permutree_ideal(m).shards);
    c.expect(permutree_ideals.size() == 16, "16 distinct permutree ideals expected");
    long essential_count = 0, removahedral_count = 0;
    std::set<std::vector<Shard>> removahedral_ideals;
    for (const ShardIdeal& ideal : ideals) {
        if (!ideal.essential()) continue;
        ++essential_count;
        const Congruence cong = congruence_classes(ideal, table);
        const RemovahedralResult rr = is_removahedral(cong, table);
        const auto decoded = ideal_decoration(ideal);
        const bool permutree = std::holds_alternative<Decoration>(decoded);
        c.expect(rr.removahedral == permutree,
                 "removahedral <=> permutree failed on an ideal with " +
                     std::to_string(ideal.shards.size()) + " shards");
        if (permutree) {
            // decoding round-trips onto the same congruence
            const Decoration d = std::get<Decoration>(decoded);
            c.expect(permutree_ideal(d) == ideal, "decoded decoration does not rebuild the ideal");
            c.expect(congruence_classes(permutree_ideal(d), table).classes == cong.classes,
                     "decoded decoration changes the partition");
        }
        if (rr.removahedral) {
            ++removahedral_count;
            removahedral_ideals.insert(ideal.shards);
        }
    }
    c.expect(removahedral_count == 16, "expected 16 removahedral essential congruences");
    c.expect(removahedral_ideals == permutree_ideals,
             "removahedral ideals are not exactly the permutree ideals");
    report["essential_congruences"] = essential_count;
    report["removahedral"] = removahedral_count;
    return finish("removahedral", c, std::move(report), start);
}

namespace {

struct MiddleGeometry {
    Congruence cong;
    std::vector<Subset> rays;
    PermutreehedronResult hedron;
    RealizeResult realized;
};

const MiddleGeometry& middle_geometry(const Decoration& m) {
    static std::map<std::string, MiddleGeometry> cache;
    auto it = cache.find(m.letters);
    if (it != cache.end()) return it->second;
    MiddleGeometry g;
    const PermTable& table = table_for(m.n());
    g.cong = congruence_classes(permutree_ideal(m), table);
    g.rays = permutree_rays(m);
    g.hedron = permutreehedron(m, table);
    g.realized = check_realizes(g.cong.classes, g.rays, permutahedron_heights(m.n()), table,
                                rat(static_cast<long>(m.n()) * (m.n() + 1), 2));
    return cache.emplace(m.letters, std::move(g)).first->second;
}

}  // namespace

Outcome permutreehedron_fans(int max_n) {
    const auto start = Clock::now();
    Checker c;
    io::json report;
    for (int n = 2; n <= max_n; ++n) {
        for (const Decoration& d : all_decorations(n)) {
            const Decoration m = middle_canonical(d);
            c.expect(permutree_ideal(d) == permutree_ideal(m), d.letters + ": ideal vs middle");
            if (d.letters != m.letters) continue;
            const MiddleGeometry& g = middle_geometry(m);
            c.expect(g.realized.ok,
                     m.letters + ": normal partition does not match the congruence classes" +
                         (g.realized.witness ? " (" + g.realized.witness->describe() + ")" : ""));
        }
    }
    report["max_n"] = max_n;
    return finish("permutreehedron", c, std::move(report), start);
}

Outcome submodular_realizations(std::uint64_t seed) {
    const auto start = Clock::now();
    Checker c;
    io::json report;
    const int n = 4;
    const PermTable& table = table_for(n);
    constexpr int kStrict = 20, kWeak = 5;
    std::vector<HeightFunction> strict_h, weak_h;
    for (int t = 0; t < kStrict; ++t)
        strict_h.push_back(random_strictly_submodular(n, seed + static_cast<std::uint64_t>(t)));
    for (int t = 0; t < kWeak; ++t)
        weak_h.push_back(random_modular(n, seed + 1000 + static_cast<std::uint64_t>(t)));
    for (const HeightFunction& h : strict_h)
        c.expect(submodularity(h).kind == Submodularity::Strict, "generator not strictly submodular");
    std::map<std::string, bool> middle_ok;
    for (const Decoration& m : middles(n)) {
        bool all_ok = true;
        for (const HeightFunction& h : strict_h) {
            const SubmodularRealization r = realize_from_submodular(m, h, table);
            if (!(r.accepted && r.realization.ok)) all_ok = false;
        }
        for (const HeightFunction& h : weak_h) {
            const SubmodularRealization r = realize_from_submodular(m, h, table);
            if (r.accepted) all_ok = false;  // weak heights must be rejected
        }
        middle_ok[m.letters] = all_ok;
        c.expect(all_ok, m.letters + ": strictly submodular sweep failed");
    }
    long decorations = 0;
    for (const Decoration& d : all_decorations(n)) {
        // same rays and classes as the middle form, so the sweep result carries over
        const Decoration m = middle_canonical(d);
        c.expect(permutree_rays(d) == permutree_rays(m) &&
                     permutree_ideal(d) == permutree_ideal(m) && middle_ok.at(m.letters),
                 d.letters + ": realization sweep failed");
        ++decorations;
    }
    report["decorations"] = decorations;
    report["strict_samples"] = kStrict;
    report["weak_samples"] = kWeak;
    report["seed"] = seed;
    return finish("submodular", c, std::move(report), start);
}

Outcome vh_agreement(int max_n) {
    const auto start = Clock::now();
    Checker c;
    io::json report;
    long shifted_agreements = 0;
    for (int n = 2; n <= max_n; ++n) {
        for (const Decoration& m : middles(n)) {
            const MiddleGeometry& g = middle_geometry(m);
            c.expect(g.hedron.agree, m.letters + ": vertex formula != removahedron vertices");
            // the paper's displayed constant binom(|I|+2, 2), for the record:
            // sum_{i in I} x_i >= binom(|I|+2,2) translates to
            // <r(I), x> <= |I| n(n+1)/2 - n binom(|I|+2,2)
            HPolytope shifted;
            shifted.n = n;
            shifted.sum_level = rat(static_cast<long>(n) * (n + 1), 2);
            for (const Subset& I : g.rays) {
                const long k = I.size();
                shifted.add(I, Rat(k * n * (n + 1) / 2 - n * binom(k + 2, 2)));
            }
            shifted.finalize();
            const VertexResult vr = vertices(shifted);
            if (vr.bounded && vr.poly == g.hedron.v_form) ++shifted_agreements;
        }
    }
    report["max_n"] = max_n;
    report["agreeing_constant"] = "binom(|I|+1,2)";
    report["shifted_constant_agreements"] = shifted_agreements;  // binom(|I|+2,2) variant
    return finish("vh-agreement", c, std::move(report), start);
}

namespace {

std::vector<std::string> kinematic_middles(int n) {
    // decorations over {d,u,x} with updown ends
    std::vector<std::string> out;
    if (n == 2) return {"xx"};
    const char alphabet[3] = {'d', 'u', 'x'};
    std::vector<int> idx(n - 2, 0);
    while (true) {
        std::string w = "x";
        for (int v : idx) w += alphabet[v];
        w += "x";
        out.push_back(w);
        int k = n - 3;
        while (k >= 0 && idx[k] == 2) idx[k--] = 0;
        if (k < 0) break;
        ++idx[k];
    }
    return out;
}

std::optional<RatVec> solve_tree_vertex(const KinematicSystem& sys, const RatVec& u,
                                        const Permutree& t) {
    std::map<std::uint32_t, std::size_t> index;
    for (std::size_t k = 0; k < sys.variables.size(); ++k) index[sys.variables[k].bits] = k;
    RatMat m = sys.equalities;
    RatVec rhs = u;
    for (const Subset& cut : edge_cuts(t)) {
        auto it = index.find(cut.bits);
        if (it == index.end()) return std::nullopt;
        RatVec row(sys.variables.size(), Rat(0));
        row[it->second] = 1;
        m.push_back(std::move(row));
        rhs.push_back(Rat(0));
    }
    std::optional<RatVec> z = solve_unique(m, rhs);
    if (!z) return std::nullopt;
    for (const Rat& x : *z)
        if (x < 0) return std::nullopt;
    return z;
}

}  // namespace

Outcome kinematic(std::uint64_t seed, int max_n) {
    const auto start = Clock::now();
    Checker c;
    io::json report;
    constexpr int kTrials = 10;
    long cases = 0;
    for (int n = 2; n <= max_n; ++n) {
        const PermTable& table = table_for(n);
        for (const std::string& letters : kinematic_middles(n)) {
            const Decoration d(letters);
            const KinematicSystem sys = kinematic_system(d);
            {
                // reduced coordinates are exactly the fan rays
                std::vector<Subset> rays = permutree_rays(d);
                std::sort(rays.begin(), rays.end());
                c.expect(sys.variables == rays, letters + ": reduced coordinates != fan rays");
            }
            const EnumeratedTrees trees = enumerate_permutrees(d, table);
            // undirected rotation edges as index pairs
            std::set<std::pair<std::size_t, std::size_t>> rotation_edges;
            std::map<std::vector<std::pair<int, int>>, std::size_t> tree_index;
            for (std::size_t i = 0; i < trees.trees.size(); ++i)
                tree_index[trees.trees[i].edges] = i;
            for (std::size_t i = 0; i < trees.trees.size(); ++i)
                for (const auto& [f, to] : trees.trees[i].edges) {
                    const std::size_t j = tree_index.at(rotate(trees.trees[i], f, to).edges);
                    rotation_edges.insert({std::min(i, j), std::max(i, j)});
                }
            std::mt19937_64 rng(seed * 7919 + std::hash<std::string>{}(letters));
            for (int trial = 0; trial < kTrials; ++trial) {
                RatVec u;
                for (std::size_t k = 0; k < sys.equalities.size(); ++k)
                    u.emplace_back(static_cast<long>(rng() % 999983) + 1);
                const QPolytopeResult qr = kinematic_polytope(d, u);
                ++cases;
                c.expect(qr.ok, letters + ": kinematic polytope failed: " + qr.error);
                if (!qr.ok) continue;
                c.expect(qr.poly.vertices.size() == trees.trees.size(),
                         letters + ": vertex count != permutree count");
                // canonical bijection: the vertex of a tree vanishes on its cuts
                std::vector<std::size_t> vertex_of_tree;
                bool bijection = true;
                std::set<RatVec> seen;
                for (const Permutree& t : trees.trees) {
                    std::optional<RatVec> z = solve_tree_vertex(sys, u, t);
                    if (!z) {
                        bijection = false;
                        break;
                    }
                    if (!std::binary_search(qr.poly.vertices.begin(), qr.poly.vertices.end(), *z))
                        bijection = false;
                    if (!seen.insert(*z).second) bijection = false;
                    vertex_of_tree.push_back(
                        std::lower_bound(qr.poly.vertices.begin(), qr.poly.vertices.end(), *z) -
                        qr.poly.vertices.begin());
                    if (!bijection) break;
                }
                c.expect(bijection, letters + ": tree -> vertex map is not a bijection");
                if (!bijection) continue;
                // supports as bitmasks for the edge test
                std::vector<std::uint64_t> support(qr.poly.vertices.size(), 0);
                for (std::size_t v = 0; v < qr.poly.vertices.size(); ++v)
                    for (std::size_t k = 0; k < sys.variables.size(); ++k)
                        if (qr.poly.vertices[v][k] != 0) support[v] |= 1ull << k;
                auto polytope_edge = [&](std::size_t a, std::size_t b) {
                    const std::uint64_t s = support[a] | support[b];
                    for (std::size_t x = 0; x < support.size(); ++x)
                        if (x != a && x != b && (support[x] & ~s) == 0) return false;
                    return true;
                };
                std::set<std::pair<std::size_t, std::size_t>> polytope_edges;
                for (std::size_t a = 0; a < support.size(); ++a)
                    for (std::size_t b = a + 1; b < support.size(); ++b)
                        if (polytope_edge(a, b)) polytope_edges.insert({a, b});
                std::set<std::pair<std::size_t, std::size_t>> mapped;
                for (const auto& [i, j] : rotation_edges)
                    mapped.insert({std::min(vertex_of_tree[i], vertex_of_tree[j]),
                                   std::max(vertex_of_tree[i], vertex_of_tree[j])});
                c.expect(mapped == polytope_edges,
                         letters + ": 1-skeleton differs from the rotation graph");
                if (letters == "xdx") {
                    c.expect(qr.poly.vertices.size() == 5 && polytope_edges.size() == 5 &&
                                 affine_dim(qr.poly.vertices) == 2,
                             "xdx kinematic polytope is not a pentagon");
                }
            }
        }
    }
    report["cases"] = cases;
    report["seed"] = seed;
    report["max_n"] = max_n;
    return finish("kinematic", c, std::move(report), start);
}

Outcome pb_defect() {
    const auto start = Clock::now();
    Checker c;
    io::json report;
    c.expect(wall_crossing_defect(4, 1, 4) == 0, "defect(4,1,4) != 0");
    const int n = 4;
    const PermTable& table = table_for(n);
    std::vector<Shard> shards;
    const Shard removed = Shard::of(1, 4, {2, 3}, n);
    for (const Shard& s : shard_poset(n))
        if (s != removed) shards.push_back(s);
    auto validated = validate_ideal(n, std::move(shards));
    c.expect(std::holds_alternative<ShardIdeal>(validated), "deleting S(1,4,{2,3}) breaks closure");
    const Congruence cong = congruence_classes(std::get<ShardIdeal>(validated), table);
    const RemovahedralResult rr = is_removahedral(cong, table);
    c.expect(!rr.removahedral, "congruence unexpectedly removahedral");
    c.expect(rr.realization.witness.has_value(), "no witness produced");
    if (rr.realization.witness) {
        const RealizeWitness& w = *rr.realization.witness;
        c.expect(w.kind == RealizeWitness::Kind::WallCrossingViolated,
                 "witness is not a wall-crossing violation");
        c.expect(w.defect == 0, "witness defect != 0");
        std::set<std::string> pos, neg;
        for (std::size_t k = 0; k < w.rays.size(); ++k)
            (w.coefficients[k] > 0 ? pos : neg).insert(w.rays[k].digits());
        c.expect(pos == std::set<std::string>({"2", "3"}), "positive side != {2, 3}");
        c.expect(neg == std::set<std::string>({"123", "234"}), "negative side != {123, 234}");
        report["witness"] = w.describe();
    }
    return finish("pb-defect", c, std::move(report), start);
}

Outcome braid_facets(int max_n) {
    const auto start = Clock::now();
    Checker c;
    io::json report;
    for (int n = 2; n <= max_n; ++n) {
        const std::vector<Subset> rays = proper_subsets(n);
        std::vector<ExchangeablePair> pairs;
        for (std::size_t a = 0; a < rays.size(); ++a)
            for (std::size_t b = a + 1; b < rays.size(); ++b) {
                if (rays[a].subset_of(rays[b]) || rays[b].subset_of(rays[a])) continue;
                pairs.push_back({rays[a], rays[b]});
            }
        const std::vector<std::size_t> irredundant = irredundant_height_inequalities(rays, pairs);
        std::set<std::size_t> facet_set(irredundant.begin(), irredundant.end());
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const bool expected = pairs[k].I.set_difference(pairs[k].J).size() == 1 &&
                                  pairs[k].J.set_difference(pairs[k].I).size() == 1;
            c.expect(facet_set.count(k) == expected,
                     "n=" + std::to_string(n) + ": facet status of " + pairs[k].label());
        }
        report["n" + std::to_string(n) + "_inequalities"] = pairs.size();
        report["n" + std::to_string(n) + "_facets"] = irredundant.size();
    }
    return finish("braid-facets", c, std::move(report), start);
}

namespace {

const std::vector<std::pair<std::string, int>>& criteria_order() {
    static const std::vector<std::pair<std::string, int>> order = {
        {"paper-table", 1},    {"closed-forms", 2}, {"typecone-oracle", 3}, {"rays-oracle", 4},
        {"removahedral", 5},   {"permutreehedron", 6}, {"submodular", 7},   {"vh-agreement", 8},
        {"kinematic", 9},      {"pb-defect", 10},   {"braid-facets", 11},
    };
    return order;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, idx] : criteria_order()) out.push_back(name);
        return out;
    }();
    return names;
}

Outcome run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "paper-table") return paper_table();
    if (name == "closed-forms") return closed_forms();
    if (name == "typecone-oracle") return typecone_oracle();
    if (name == "rays-oracle") return rays_oracle();
    if (name == "removahedral") return removahedral_sweep();
    if (name == "permutreehedron") return permutreehedron_fans();
    if (name == "submodular") return submodular_realizations(seed);
    if (name == "vh-agreement") return vh_agreement();
    if (name == "kinematic") return kinematic(seed);
    if (name == "pb-defect") return pb_defect();
    if (name == "braid-facets") return braid_facets();
    throw std::invalid_argument("unknown verification suite: " + name);
}

std::vector<Outcome> run_all(std::uint64_t seed) {
    std::vector<Outcome> out;
    for (const std::string& name : suite_names()) out.push_back(run_suite(name, seed));
    return out;
}

}  // namespace ptf::verify
