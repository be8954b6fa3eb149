#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "ont/canon.hpp"
#include "ont/catalog.hpp"
#include "ont/engine.hpp"
#include "ont/exact.hpp"
#include "ont/generators.hpp"
#include "ont/io.hpp"

namespace fs = std::filesystem;
using namespace ont;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNotNearTriangulation = 3;
constexpr int kExitVerification = 4;
constexpr int kExitBudget = 5;

std::string catalog_path() {
    if (const char* env = std::getenv("ORIENT_NT_CACHE")) return env;
    return "exceptions.cat";
}

int map_error(const Error& e) {
    switch (e.code()) {
        case Errc::ParseError:
            return kExitParse;
        case Errc::NotNearTriangulation:
        case Errc::NotTwoConnected:
        case Errc::NotMaximalOuterplanar:
        case Errc::NonPlanarEmbedding:
        case Errc::NotSimple:
        case Errc::Disconnected:
            return kExitNotNearTriangulation;
        default:
            return kExitVerification;
    }
}

struct OrientArgs {
    std::string input;
    std::string out_or;
    std::string dot;
    int base_max = 8;
    bool verify_levels = true;
    bool allow_exception = false;
    bool json = false;
    uint64_t seed = 0;  // reserved; the engine is deterministic
};

int run_orient(const OrientArgs& a) {
    PlaneGraph g = read_pg_file(a.input);
    Catalog cat = Catalog::load_or_bootstrap(catalog_path());
    EngineConfig cfg;
    cfg.base_case_max_n = a.base_max;
    cfg.verify_every_level = a.verify_levels;
    Engine engine(std::move(cat), cfg);
    Certificate cert = engine.orient(g);

    std::string out_path = a.out_or.empty() ? (fs::path(a.input).stem().string() + ".or") : a.out_or;
    write_or_file(out_path, cert.orientation);
    if (!a.dot.empty()) {
        std::ofstream dot(a.dot);
        write_dot(dot, cert.orientation);
    }
    if (a.json)
        std::cout << certificate_json(g, cert) << "\n";
    else
        std::cout << certificate_report(cert);

    std::string reason;
    if (!verify_certificate(g, cert, &reason)) {
        std::cerr << "verification failed: " << reason << "\n";
        return kExitVerification;
    }
    if (cert.exception && !a.allow_exception) {
        std::cerr << "input is a catalog exception (" << cert.exception_name
                  << "); rerun with --allow-exception\n";
        return kExitVerification;
    }
    return kExitOk;
}

int run_exact(const std::string& input, uint64_t budget_nodes, double budget_secs, int anchor_1based,
              int anchor_bound, int target, bool json, const std::string& out_or) {
    PlaneGraph g = read_pg_file(input);
    ExactOptions opts;
    if (budget_nodes > 0) opts.budget.max_nodes = budget_nodes;
    if (budget_secs > 0) opts.budget.time_limit_secs = budget_secs;
    if (target >= 0) opts.budget.target_bound = target;
    if (anchor_1based > 0) {
        opts.anchor = anchor_1based - 1;
        opts.anchor_bound = anchor_bound;
    }
    opts.parallel = true;
    ExactResult r = oriented_diameter_exact(g, opts);
    if (json) {
        std::cout << "{\"value\": " << (r.value ? std::to_string(*r.value) : "null")
                  << ", \"complete\": " << (r.complete ? "true" : "false") << ", \"nodes\": " << r.nodes << "}\n";
    } else {
        if (r.value)
            std::cout << "oriented_diameter=" << *r.value << (r.complete ? "" : " (incumbent, lower bound only)")
                      << "\n";
        else
            std::cout << "no orientation found\n";
        std::cout << "nodes=" << r.nodes << "\n";
    }
    if (r.value && !out_or.empty()) write_or_file(out_or, r.witness);
    if (r.status == SolveStatus::BudgetExhausted) return kExitBudget;
    if (r.status == SolveStatus::Infeasible) return kExitVerification;
    return kExitOk;
}

int run_census(int nmax, const std::string& outdir, bool rebuild_catalog, int jobs, uint64_t budget_nodes,
               double budget_secs) {
    SearchBudget budget;
    if (budget_nodes > 0) budget.max_nodes = budget_nodes;
    if (budget_secs > 0) budget.time_limit_secs = budget_secs;
    std::vector<CensusRow> rows = census(nmax, budget, jobs);

    fs::path dir = outdir.empty() ? fs::path("census_out") : fs::path(outdir);
    fs::create_directories(dir);
    std::ofstream tsv(dir / "census.tsv");
    tsv << "id\tn\tm\toriented_diameter\tbound\texception\n";
    int exceptions = 0;
    bool exhausted = false;
    for (const auto& r : rows) {
        tsv << r.id << "\t" << r.n << "\t" << r.m << "\t" << r.oriented_diameter << "\t" << r.bound << "\t"
            << (r.exception ? "true" : "false") << "\n";
        if (r.exception) ++exceptions;
        exhausted = exhausted || r.budget_exhausted;
        std::string stem = "g" + std::to_string(r.id);
        write_pg_file((dir / (stem + ".pg")).string(), r.graph);
        write_or_file((dir / (stem + ".or")).string(), r.witness);
    }
    std::cout << "census: " << rows.size() << " classes up to n=" << nmax << ", " << exceptions
              << " exception(s)\n";
    if (rebuild_catalog) {
        Catalog cat = Catalog::bootstrap(jobs);
        std::ofstream out(catalog_path());
        cat.save(out);
        std::cout << "catalog rebuilt at " << catalog_path() << "\n";
    }
    if (exhausted) return kExitBudget;
    if (nmax >= 8 && exceptions != 7) {
        std::cerr << "expected exactly 7 exceptions at nmax>=8, found " << exceptions << "\n";
        return 1;
    }
    return kExitOk;
}

int run_verify(const std::string& pg_path, const std::string& or_path, bool allow_exception, bool json) {
    PlaneGraph g = read_pg_file(pg_path);
    Orientation d = read_or_file(or_path, g.vertex_count());
    // the orientation must cover the graph's edges exactly
    for (const auto& [u, v] : g.edges())
        if (!d.has_arc(u, v) && !d.has_arc(v, u))
            fail(Errc::ParseError, or_path + ": edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
                                       " is missing an arc");
    for (const auto& [u, v] : d.arcs())
        if (!g.has_edge(u, v))
            fail(Errc::ParseError,
                 or_path + ": arc " + std::to_string(u + 1) + "->" + std::to_string(v + 1) + " is not a graph edge");

    Certificate cert;
    cert.orientation = d;
    cert.bound = half_ceil(g.vertex_count());
    cert.strongly_connected = is_strongly_connected(d);
    cert.diameter = diameter(d);
    Catalog cat = Catalog::load_or_bootstrap(catalog_path());
    if (const CatalogEntry* ent = cat.match(g)) {
        cert.exception = true;
        cert.exception_name = ent->name;
    }
    if (json)
        std::cout << certificate_json(g, cert) << "\n";
    else
        std::cout << certificate_report(cert);

    if (!cert.strongly_connected) {
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (d.out_adj()[v].empty()) {
                std::cerr << "not strongly connected: vertex " << (v + 1) << " is a sink\n";
                return kExitVerification;
            }
        std::cerr << "not strongly connected\n";
        return kExitVerification;
    }
    if (*cert.diameter > cert.bound && !(allow_exception && cert.exception)) {
        std::cerr << "diameter " << *cert.diameter << " exceeds bound " << cert.bound << "\n";
        return kExitVerification;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orientations of 2-connected near triangulations with certified diameter"};
    app.require_subcommand(1);

    OrientArgs oa;
    auto* orient = app.add_subcommand("orient", "orient a near triangulation within ceil(n/2)");
    orient->add_option("input", oa.input, "input .pg file")->required();
    orient->add_option("--out", oa.out_or, "output .or path (default: input stem + .or)");
    orient->add_option("--dot", oa.dot, "also write a DOT rendering");
    orient->add_option("--base-max", oa.base_max, "exact-search base case ceiling (>= 8)");
    orient->add_flag("--verify-levels,!--no-verify-levels", oa.verify_levels, "verify every recursion level");
    orient->add_flag("--allow-exception", oa.allow_exception, "exit 0 for the seven catalog exceptions");
    orient->add_flag("--json", oa.json, "machine-readable certificate");
    orient->add_option("--seed", oa.seed, "reserved");

    std::string exact_input, exact_out;
    uint64_t budget_nodes = 0;
    double budget_secs = 0;
    int anchor = 0, anchor_bound = 0, target = -1;
    bool exact_json = false;
    auto* exact = app.add_subcommand("exact", "exact oriented diameter by branch and bound");
    exact->add_option("input", exact_input)->required();
    exact->add_option("--budget-nodes", budget_nodes);
    exact->add_option("--budget-secs", budget_secs);
    exact->add_option("--anchor", anchor, "anchored vertex (1-based)");
    exact->add_option("--anchor-bound", anchor_bound);
    exact->add_option("--target", target, "stop at the first orientation this good");
    exact->add_option("--out", exact_out, "write the witness .or");
    exact->add_flag("--json", exact_json);

    int nmax = 8, jobs = 1;
    std::string outdir;
    bool rebuild = false;
    auto* cen = app.add_subcommand("census", "enumerate and solve all classes up to nmax");
    cen->add_option("--nmax", nmax);
    cen->add_option("--outdir", outdir);
    cen->add_option("--jobs", jobs);
    cen->add_flag("--rebuild-catalog", rebuild);
    cen->add_option("--budget-nodes", budget_nodes);
    cen->add_option("--budget-secs", budget_secs);

    std::string vpg, vor;
    bool v_allow = false, v_json = false;
    auto* ver = app.add_subcommand("verify", "independently check an orientation file");
    ver->add_option("input.pg", vpg)->required();
    ver->add_option("input.or", vor)->required();
    ver->add_flag("--allow-exception", v_allow);
    ver->add_flag("--json", v_json);

    std::string kind, gen_out;
    int gn = 10;
    uint64_t gseed = 1;
    double gbias = 0.5;
    bool gfan = false;
    auto* gen = app.add_subcommand("gen", "emit test instances as .pg");
    gen->add_option("kind", kind, "random | outerplanar | tight | enumerate")->required();
    gen->add_option("--n", gn);
    gen->add_option("--seed", gseed);
    gen->add_option("--bias", gbias);
    gen->add_flag("--fan", gfan);
    gen->add_option("--out", gen_out, "output file (or directory for enumerate)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (orient->parsed()) return run_orient(oa);
        if (exact->parsed())
            return run_exact(exact_input, budget_nodes, budget_secs, anchor, anchor_bound, target, exact_json,
                             exact_out);
        if (cen->parsed()) return run_census(nmax, outdir, rebuild, jobs, budget_nodes, budget_secs);
        if (ver->parsed()) return run_verify(vpg, vor, v_allow, v_json);
        if (gen->parsed()) {
            if (kind == "enumerate") {
                fs::path dir = gen_out.empty() ? fs::path("enum_out") : fs::path(gen_out);
                fs::create_directories(dir);
                auto all = enumerate_near_triangulations(gn);
                std::ofstream manifest(dir / "manifest.txt");
                manifest << "n " << gn << " classes " << all.size() << "\n";
                for (size_t i = 0; i < all.size(); ++i)
                    write_pg_file((dir / ("nt" + std::to_string(gn) + "_" + std::to_string(i) + ".pg")).string(),
                                  all[i]);
                std::cout << all.size() << " classes written to " << dir << "\n";
                return kExitOk;
            }
            PlaneGraph g;
            if (kind == "random")
                g = random_near_triangulation(gn, gseed, gbias);
            else if (kind == "outerplanar")
                g = random_maximal_outerplanar(gn, gseed, gfan);
            else if (kind == "tight")
                g = tight_family(gn);
            else
                fail(Errc::ParseError, "unknown gen kind: " + kind);
            if (gen_out.empty())
                write_pg(std::cout, g);
            else
                write_pg_file(gen_out, g);
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return map_error(e);
    }
    return kExitOk;
}
