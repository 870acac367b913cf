// Command-line surface: enumeration, verification suites, JSON/CSV/OFF export.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>

#include "ptf/io.hpp"
#include "ptf/parallel.hpp"
#include "ptf/realizations.hpp"
#include "ptf/verify.hpp"

namespace {

using ptf::io::json;

constexpr int kMaxSweepN = 6;       // decoration sweeps
constexpr int kMaxCongruenceN = 4;  // full congruence sweeps

struct Output {
    std::string format = "json";
    std::string path;

    void emit(const json& report, const std::string& rendered = "") const {
        const std::string text = rendered.empty() ? report.dump(2) + "\n" : rendered;
        if (path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(path, std::ios::binary);
            out << text;
        }
    }
};

json report_shell(const std::string& command, std::uint64_t seed) {
    json r;
    r["command"] = command;
    r["seed"] = seed;
    r["inputs"] = json::object();
    return r;
}

void stamp_runtime(json& r, std::chrono::steady_clock::time_point start) {
    // excluded from byte-for-byte report comparisons
    r["runtime_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
            .count();
}

int cmd_shards(int n, const Output& out) {
    const auto start = std::chrono::steady_clock::now();
    json r = report_shell("shards", 0);
    r["inputs"]["n"] = n;
    json list = json::array();
    const std::vector<ptf::Shard> poset = ptf::shard_poset(n);
    for (const ptf::Shard& s : poset) {
        json e = ptf::io::to_json(s);
        e["label"] = s.label();
        e["length"] = s.length();
        e["kind"] = s.is_mixed() ? "mixed" : (s.is_up() && s.is_down() ? "basic"
                                              : s.is_up()              ? "up"
                                                                       : "down");
        e["arc"] = ptf::arc_diagram(s);
        list.push_back(e);
    }
    r["shards"] = list;
    json forcing = json::array();
    for (const ptf::Shard& a : poset)
        for (const ptf::Shard& b : poset)
            if (a != b && ptf::forces(a, b)) forcing.push_back({a.label(), b.label()});
    r["forcing"] = forcing;
    r["counts"] = {{"shards", poset.size()}, {"forcing_pairs", forcing.size()}};
    stamp_runtime(r, start);
    out.emit(r);
    return 0;
}

int cmd_congruence(const std::string& decoration, const std::string& ideal_path, int n,
                   const Output& out) {
    const auto start = std::chrono::steady_clock::now();
    json r = report_shell("congruence", 0);
    ptf::ShardIdeal ideal;
    if (!decoration.empty()) {
        const ptf::Decoration d(decoration);
        ideal = ptf::permutree_ideal(d);
        r["inputs"]["decoration"] = decoration;
    } else {
        std::ifstream in(ideal_path);
        if (!in) throw CLI::ValidationError("--ideal", "cannot open " + ideal_path);
        json j;
        in >> j;
        ideal = ptf::io::ideal_from_json(j);
        r["inputs"]["ideal"] = ideal_path;
    }
    if (n != 0 && n != ideal.n) throw CLI::ValidationError("--n", "conflicts with the ideal size");
    const ptf::PermTable table(ideal.n);
    const ptf::Congruence cong = ptf::congruence_classes(ideal, table);
    r["ideal"] = ptf::io::to_json(ideal);
    r["essential"] = cong.essential;
    json classes = json::array();
    for (const std::vector<std::size_t>& cls : cong.classes.classes()) {
        json row = json::array();
        for (std::size_t idx : cls) row.push_back(table[idx].str());
        classes.push_back(row);
    }
    r["classes"] = classes;
    json rays = json::array();
    for (const ptf::Subset& I : ptf::canonical_ray_order(ptf::quotient_fan_rays(ideal)))
        rays.push_back(I.digits());
    r["quotient_fan_rays"] = rays;
    const auto decoded = ptf::ideal_decoration(ideal);
    if (std::holds_alternative<ptf::Decoration>(decoded))
        r["permutree_decoration"] = std::get<ptf::Decoration>(decoded).letters;
    else
        r["permutree_decoration"] = nullptr;
    r["lattice"] = ptf::is_lattice(ptf::quotient_order(cong.classes, table));
    if (cong.essential) {
        const ptf::RemovahedralResult rr = ptf::is_removahedral(cong, table);
        r["removahedral"] = rr.removahedral;
        if (rr.realization.witness) r["witnesses"] = {rr.realization.witness->describe()};
    }
    r["counts"] = {{"classes", cong.classes.num_classes},
                   {"rays", rays.size()},
                   {"permutations", table.size()}};
    stamp_runtime(r, start);
    out.emit(r);
    return 0;
}

int cmd_permutree(const std::string& decoration, const Output& out) {
    const auto start = std::chrono::steady_clock::now();
    const ptf::Decoration d(decoration);
    if (d.n() > kMaxSweepN) throw CLI::ValidationError("--decoration", "size capped at 6");
    json r = report_shell("permutree", 0);
    r["inputs"]["decoration"] = decoration;
    const ptf::PermTable table(d.n());
    const ptf::RotationGraph g = ptf::rotation_lattice(d, table);
    json trees = json::array();
    for (const ptf::Permutree& t : g.trees) {
        json e = ptf::io::to_json(t);
        json coords = json::array();
        for (long x : ptf::vertex_coordinates_int(t)) coords.push_back(x);
        e["vertex"] = coords;
        json exts = json::array();
        for (const ptf::Permutation& p : ptf::linear_extensions(t)) exts.push_back(p.str());
        e["linear_extensions"] = exts;
        trees.push_back(e);
    }
    r["permutrees"] = trees;
    json arcs = json::array();
    for (std::size_t i = 0; i < g.increasing.size(); ++i)
        for (int j : g.increasing[i]) arcs.push_back({i, static_cast<std::size_t>(j)});
    r["increasing_rotations"] = arcs;
    r["lattice"] = g.lattice;
    r["counts"] = {{"permutrees", g.trees.size()}, {"rotations", arcs.size()}};
    stamp_runtime(r, start);
    out.emit(r);
    return 0;
}

int cmd_typecone(const std::string& decoration, int n, const Output& out) {
    const auto start = std::chrono::steady_clock::now();
    json r = report_shell("typecone", 0);
    if (!decoration.empty()) {
        const ptf::Decoration d(decoration);
        if (d.n() > kMaxSweepN) throw CLI::ValidationError("--decoration", "size capped at 6");
        r["inputs"]["decoration"] = decoration;
        r["rho"] = ptf::rho(d);
        r["chi"] = ptf::chi(d);
        r["phi"] = ptf::phi(d);
        r["simplicial"] = ptf::is_simplicial(d);
        json rays = json::array();
        for (const ptf::Subset& I : ptf::canonical_ray_order(ptf::permutree_rays(d)))
            rays.push_back(I.digits());
        r["rays"] = rays;
        json pairs = json::array();
        for (const ptf::ExchangeablePair& p : ptf::exchangeable_pairs(d)) pairs.push_back(p.label());
        r["exchangeable_pairs"] = pairs;
        json facets = json::array();
        for (const ptf::ExchangeablePair& p : ptf::typecone_facets(d)) facets.push_back(p.label());
        r["typecone_facets"] = facets;
        stamp_runtime(r, start);
        out.emit(r);
        return 0;
    }
    if (n < 1 || n > kMaxSweepN) throw CLI::ValidationError("--n", "sweep size must be in [1, 6]");
    r["inputs"]["n"] = n;
    if (out.format == "csv") {
        out.emit(r, ptf::io::counts_csv(n));
        return 0;
    }
    json rows = json::array();
    for (const ptf::Decoration& d : ptf::all_decorations(n))
        rows.push_back({{"decoration", d.letters},
                        {"rho", ptf::rho(d)},
                        {"chi", ptf::chi(d)},
                        {"phi", ptf::phi(d)},
                        {"simplicial", ptf::is_simplicial(d)}});
    r["sweep"] = rows;
    stamp_runtime(r, start);
    out.emit(r);
    return 0;
}

int cmd_polytope(const std::string& decoration, const std::string& form, std::uint64_t seed,
                 bool use_random_heights, const Output& out) {
    const auto start = std::chrono::steady_clock::now();
    const ptf::Decoration d(decoration);
    if (d.n() > 5) throw CLI::ValidationError("--decoration", "polytope size capped at 5");
    json r = report_shell("polytope", seed);
    r["inputs"]["decoration"] = decoration;
    r["inputs"]["form"] = form;
    const ptf::PermTable table(d.n());
    const ptf::PermutreehedronResult res = ptf::permutreehedron(d, table);
    if (form == "v" || form == "both") r["v_form"] = ptf::io::to_json(res.v_form, d.n());
    if (form == "h" || form == "both") {
        r["h_form"] = ptf::io::to_json(res.h_form);
        r["h_vertices"] = ptf::io::to_json(res.h_vertices, d.n());
    }
    r["agree"] = res.agree;
    r["counts"] = {{"vertices", res.v_form.vertices.size()},
                   {"facet_candidates", res.h_form.ineqs.size()}};
    if (use_random_heights) {
        const ptf::HeightFunction h = ptf::random_strictly_submodular(d.n(), seed);
        const ptf::SubmodularRealization sr = ptf::realize_from_submodular(d, h, table);
        r["random_heights"] = {{"accepted", sr.accepted},
                               {"realizes", sr.accepted && sr.realization.ok}};
    }
    if (out.format == "off") {
        out.emit(r, ptf::io::to_off(res.h_vertices, res.h_form));
        return 0;
    }
    stamp_runtime(r, start);
    out.emit(r);
    return res.agree ? 0 : 1;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const Output& out) {
    const auto start = std::chrono::steady_clock::now();
    json r = report_shell("verify", seed);
    r["inputs"]["suite"] = suite;
    std::vector<ptf::verify::Outcome> outcomes;
    if (suite == "all") {
        outcomes = ptf::verify::run_all(seed);
    } else {
        outcomes.push_back(ptf::verify::run_suite(suite, seed));
    }
    bool all_pass = true;
    json rows = json::array();
    for (const ptf::verify::Outcome& o : outcomes) {
        all_pass = all_pass && o.pass;
        json row;
        row["suite"] = o.name;
        row["pass"] = o.pass;
        row["detail"] = o.detail;
        row["report"] = o.report;
        rows.push_back(row);
        std::cerr << (o.pass ? "[PASS] " : "[FAIL] ") << o.name << ": " << o.detail << "\n";
    }
    r["results"] = rows;
    r["pass"] = all_pass;
    stamp_runtime(r, start);
    out.emit(r);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutree fans, lattice congruences and their polytopes"};
    app.require_subcommand(1);
    int jobs = 0;
    app.add_option("--jobs", jobs, "worker threads for sweep kernels (0 = all, 1 = serial)");

    Output out;
    std::string decoration, ideal_path, form = "both", suite = "all";
    int n = 0;
    std::uint64_t seed = 0;
    bool random_heights = false;

    auto add_output = [&](CLI::App* cmd, std::initializer_list<std::string> formats) {
        cmd->add_option("--format", out.format, "output format")
            ->check(CLI::IsMember(formats))
            ->capture_default_str();
        cmd->add_option("--out", out.path, "write the report to a file");
    };

    CLI::App* shards = app.add_subcommand("shards", "shard poset, forcing relation, arc diagrams");
    shards->add_option("--n", n, "ambient size")->required()->check(CLI::Range(1, kMaxSweepN));
    add_output(shards, {"json"});

    CLI::App* congruence = app.add_subcommand("congruence", "congruence classes of a shard ideal");
    congruence->add_option("--decoration", decoration, "permutree decoration (o|d|u|x letters)");
    congruence->add_option("--ideal", ideal_path, "shard ideal JSON file");
    congruence->add_option("--n", n, "ambient size check")->check(CLI::Range(1, kMaxCongruenceN));
    add_output(congruence, {"json"});

    CLI::App* permutree = app.add_subcommand("permutree", "enumerate permutrees and rotations");
    permutree->add_option("--decoration", decoration, "decoration")->required();
    add_output(permutree, {"json"});

    CLI::App* typecone = app.add_subcommand("typecone", "rays, exchangeable pairs, type cone facets");
    typecone->add_option("--decoration", decoration, "single decoration");
    typecone->add_option("--n", n, "sweep all decorations of this size");
    add_output(typecone, {"json", "csv"});

    CLI::App* polytope = app.add_subcommand("polytope", "permutreehedron in V- and H-form");
    polytope->add_option("--decoration", decoration, "decoration")->required();
    polytope->add_option("--form", form, "v, h or both")->check(CLI::IsMember({"v", "h", "both"}));
    polytope->add_option("--seed", seed, "seed for --random-heights");
    polytope->add_flag("--random-heights", random_heights,
                       "also realize from a seeded strictly submodular height");
    add_output(polytope, {"json", "off"});

    CLI::App* verify = app.add_subcommand("verify", "verification suites (exit 1 on failure)");
    verify
        ->add_option("suite", suite,
                     "suite name or 'all'; names: " + [] {
                         std::string s;
                         for (const std::string& x : ptf::verify::suite_names())
                             s += (s.empty() ? "" : ", ") + x;
                         return s;
                     }())
        ->required();
    verify->add_option("--seed", seed, "seed for randomized inputs")->capture_default_str();
    verify->add_option("--n", n, "unused compatibility flag; suites pin their own bounds");
    add_output(verify, {"json"});

    try {
        app.parse(argc, argv);
        ptf::set_jobs(jobs);
        if (shards->parsed()) return cmd_shards(n, out);
        if (congruence->parsed()) {
            if (decoration.empty() == ideal_path.empty())
                throw CLI::ValidationError("congruence", "need exactly one of --decoration, --ideal");
            return cmd_congruence(decoration, ideal_path, n, out);
        }
        if (permutree->parsed()) return cmd_permutree(decoration, out);
        if (typecone->parsed()) {
            if (decoration.empty() && n == 0)
                throw CLI::ValidationError("typecone", "need --decoration or --n");
            return cmd_typecone(decoration, n, out);
        }
        if (polytope->parsed()) return cmd_polytope(decoration, form, seed, random_heights, out);
        if (verify->parsed()) {
            if (suite != "all") {
                const auto& names = ptf::verify::suite_names();
                if (std::find(names.begin(), names.end(), suite) == names.end())
                    throw CLI::ValidationError("verify", "unknown suite " + suite);
            }
            return cmd_verify(suite, seed, out);
        }
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
