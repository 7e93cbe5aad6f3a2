#include "dw/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <random>

#include "CLI11.hpp"

#include "dw/invariants.hpp"
#include "dw/report.hpp"
#include "dw/suites.hpp"

namespace dw {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DW_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("DW_SEED is not an unsigned integer: ") + env);
        }
    }
    return 0;
}

// Descriptor errors are usage errors; anything thrown later is computational.
template <class F>
auto parse_input(F&& f) {
    try {
        return f();
    } catch (const GroupError& e) {
        throw UsageError(e.what());
    } catch (const CocycleError& e) {
        throw UsageError(e.what());
    } catch (const SurfaceError& e) {
        throw UsageError(e.what());
    }
}

struct ComputeArgs {
    std::string group, cocycle = "trivial", surface, method = "direct";
    bool oracle = false, json = false, csv = false;
    std::uint64_t seed = 0;
    int workers = 1;
};

int run_compute(const ComputeArgs& a, std::ostream& out) {
    const TwoCocycle c = parse_input([&] { return parse_cocycle(a.cocycle, make_group(a.group)); });
    const SurfaceSpec s = parse_input([&] { return parse_surface(a.surface); });
    if (!s.orientable && !c.is_sign_valued())
        throw InvariantError("non-orientable surfaces need a {+1,-1}-valued cocycle; " + c.label() + " is not");
    CrossCheckOptions o = options_for_methods({a.method});
    o.oracle = a.oracle;
    o.seed = a.seed;
    o.workers = a.workers;
    const InvariantReport r = cross_check(c, s, o);
    if (a.csv) out << report_csv_header() << '\n' << report_csv_row(r) << '\n';
    else out << report_json(r).dump(2) << '\n';
    return r.passed() ? 0 : 1;
}

struct StateSumArgs {
    std::string group, cocycle = "trivial", surface, tri = "standard";
    int workers = 1;
};

int run_statesum(const StateSumArgs& a, std::ostream& out) {
    const TwoCocycle c = parse_input([&] { return parse_cocycle(a.cocycle, make_group(a.group)); });
    const GluedTriangulation tri = parse_input([&] {
        if (a.tri == "standard") {
            if (a.surface.empty()) throw UsageError("--surface is required with --tri standard");
            return standard_triangulation(parse_surface(a.surface));
        }
        if (!a.tri.starts_with("file:")) throw UsageError("--tri must be 'standard' or 'file:<path>'");
        GluedTriangulation t = read_triangulation_file(a.tri.substr(5));
        if (!a.surface.empty() && !(classify(t) == parse_surface(a.surface)))
            throw UsageError("triangulation file is " + classify(t).descriptor() + ", not " + a.surface);
        return t;
    });
    const TwistedGroupAlgebra alg(c);
    const bool orientable = orientability_and_orientation(tri).orientable;
    const StateSumResult r = orientable ? fhk_state_sum(alg, tri, {a.workers}) : star_state_sum(alg, tri, {a.workers});
    Json j = state_sum_json(r, c.group().order());
    j["surface"] = classify(tri).descriptor();
    j["variant"] = orientable ? "oriented" : "star";
    out << j.dump(2) << '\n';
    return 0;
}

struct CheckArgs {
    std::string suite = "all", config;
    bool json = false;
    std::uint64_t seed = 0;
    int workers = 1;
};

int run_check(const CheckArgs& a, std::ostream& out) {
    if (!a.config.empty()) {
        SuiteConfig cfg;
        try {
            cfg = parse_input([&] { return read_suite_config(a.config); });
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const auto reports = run_config(cfg, a.workers);
        bool ok = true;
        for (const auto& r : reports) ok = ok && r.passed();
        if (a.json) {
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(report_json(r));
            out << Json{{"passed", ok}, {"reports", arr}}.dump(2) << '\n';
        } else {
            for (const auto& r : reports)
                out << (r.passed() ? "PASS " : "FAIL ") << r.group << " " << r.cocycle << " " << r.surface.descriptor()
                    << " deviation=" << r.max_deviation << '\n';
        }
        return ok ? 0 : 1;
    }
    std::vector<CheckResult> results;
    try {
        results = run_suite(a.suite, a.seed);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    if (a.json) {
        Json arr = Json::array();
        for (const auto& r : results)
            arr.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        out << Json{{"suite", a.suite}, {"passed", ok}, {"results", arr}}.dump(2) << '\n';
    } else {
        for (const auto& r : results)
            out << (r.passed ? "PASS" : "FAIL") << "  [" << std::setw(8) << r.id << "] " << r.title << " (" << r.detail
                << ", " << std::fixed << std::setprecision(2) << r.seconds << " s)" << std::defaultfloat << '\n';
    }
    return ok ? 0 : 1;
}

struct DecomposeArgs {
    std::string group, cocycle = "trivial";
    std::uint64_t seed = 0;
};

int run_decompose(const DecomposeArgs& a, std::ostream& out) {
    const TwoCocycle c = parse_input([&] { return parse_cocycle(a.cocycle, make_group(a.group)); });
    const TwistedGroupAlgebra alg(c);
    WedderburnDecomposition dec = wedderburn_decompose(alg, a.seed);
    if (alg.has_star()) dec = with_fs_indicators(alg, std::move(dec));
    Json j = decomposition_json(dec);
    j["group"] = c.group().name();
    j["cocycle"] = c.label();
    j["regular_classes"] = c_regular_count(c);
    out << j.dump(2) << '\n';
    return dec.sum_dim_squares() == c.group().order() && dec.block_count() == c_regular_count(c) ? 0 : 1;
}

struct TriangulationArgs {
    std::string surface;
    int moves = 0;
    std::uint64_t seed = 0;
};

int run_triangulation(const TriangulationArgs& a, std::ostream& out) {
    GluedTriangulation tri = parse_input([&] { return standard_triangulation(parse_surface(a.surface)); });
    std::mt19937_64 rng(a.seed);
    for (int m = 0; m < a.moves; ++m) {
        if (rng() % 2 == 0) {
            tri = pachner_13(tri, static_cast<int>(rng() % tri.triangle_count()));
            continue;
        }
        for (int attempt = 0; attempt < 32; ++attempt) {
            const int f = static_cast<int>(rng() % tri.flag_count());
            if (f / 3 == tri.partner(f) / 3) continue;
            tri = pachner_22(tri, f);
            break;
        }
    }
    Json j = triangulation_json(tri);
    j["surface"] = classify(tri).descriptor();
    j["vertices"] = tri.vertex_count();
    j["edges"] = tri.edge_count();
    out << j.dump(2) << '\n';
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Dijkgraaf-Witten invariants of surfaces", "dw"};
    app.require_subcommand(1);

    std::uint64_t seed_default = 0;
    try {
        seed_default = default_seed();
    } catch (const UsageError& e) {
        err << e.what() << '\n';
        return 2;
    }

    ComputeArgs ca;
    ca.seed = seed_default;
    auto* compute = app.add_subcommand("compute", "Evaluate the invariant and cross-check the requested routes");
    compute->add_option("--group", ca.group, "Group descriptor, e.g. symmetric:3")->required();
    compute->add_option("--cocycle", ca.cocycle, "trivial | heisenberg:n | sign:i | file:<path>");
    compute->add_option("--surface", ca.surface, "orientable:<g> | nonorientable:<k>")->required();
    compute->add_option("--method", ca.method)->check(CLI::IsMember({"direct", "statesum", "verlinde", "all"}));
    compute->add_flag("--oracle", ca.oracle, "Also run the labeling sum when a small triangulation exists");
    auto* json_flag = compute->add_flag("--json", ca.json);
    compute->add_flag("--csv", ca.csv)->excludes(json_flag);
    compute->add_option("--seed", ca.seed);
    compute->add_option("--workers", ca.workers)->check(CLI::Range(1, 64));

    StateSumArgs sa;
    auto* statesum = app.add_subcommand("statesum", "Run the state sum on a triangulation");
    statesum->add_option("--group", sa.group)->required();
    statesum->add_option("--cocycle", sa.cocycle);
    statesum->add_option("--surface", sa.surface);
    statesum->add_option("--tri", sa.tri, "standard | file:<path>");
    statesum->add_option("--workers", sa.workers)->check(CLI::Range(1, 64));

    CheckArgs ka;
    ka.seed = seed_default;
    auto* check = app.add_subcommand("check", "Run acceptance suites or a JSON suite config");
    check->add_option("--suite", ka.suite)->check(CLI::IsMember({"theorems", "oracles", "invariance", "all"}));
    check->add_option("--config", ka.config);
    check->add_flag("--json", ka.json);
    check->add_option("--seed", ka.seed);
    check->add_option("--workers", ka.workers)->check(CLI::Range(1, 64));

    DecomposeArgs da;
    da.seed = seed_default;
    auto* decompose = app.add_subcommand("decompose", "Wedderburn blocks of the twisted group algebra");
    decompose->add_option("--group", da.group)->required();
    decompose->add_option("--cocycle", da.cocycle);
    decompose->add_option("--seed", da.seed);

    TriangulationArgs ta;
    ta.seed = seed_default;
    auto* triangulation = app.add_subcommand("triangulation", "Export a standard triangulation, optionally moved");
    triangulation->add_option("--surface", ta.surface)->required();
    triangulation->add_option("--moves", ta.moves, "Random Pachner moves to apply")->check(CLI::Range(0, 1000));
    triangulation->add_option("--seed", ta.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        err << app.help();
        return 2;
    }

    try {
        if (*compute) return run_compute(ca, out);
        if (*statesum) return run_statesum(sa, out);
        if (*check) return run_check(ka, out);
        if (*decompose) return run_decompose(da, out);
        if (*triangulation) return run_triangulation(ta, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        out << Json{{"error", e.what()}}.dump(2) << '\n';
        return 1;
    }
    return 2;
}

}  // namespace dw
