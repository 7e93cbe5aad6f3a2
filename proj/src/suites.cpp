#include "dw/suites.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace dw {

namespace {

class Tally {
  public:
    void expect(bool ok, const std::string& what) {
        ++total_;
        if (ok) return;
        ++failed_;
        if (failed_ <= 5) failures_ += (failed_ > 1 ? "; " : "") + what;
    }
    void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
    bool passed() const { return failed_ == 0 && total_ > 0; }
    std::string detail() const {
        std::ostringstream out;
        out << (total_ - failed_) << "/" << total_ << " checks";
        if (failed_) out << "; failures: " << failures_;
        if (!notes_.empty()) out << "; " << notes_;
        return out.str();
    }

  private:
    int total_ = 0, failed_ = 0;
    std::string failures_, notes_;
};

std::string fmt(std::complex<double> z) {
    std::ostringstream out;
    out.precision(12);
    out << z.real();
    if (std::abs(z.imag()) > 1e-12) out << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return out.str();
}

std::string where(const CatalogPair& p, const SurfaceSpec& s) {
    return p.group + "/" + p.cocycle + "/" + s.descriptor();
}

TwoCocycle load(const CatalogPair& p) { return parse_cocycle(p.cocycle, make_group(p.group)); }

bool close(std::complex<double> a, std::complex<double> b, double tol) { return relative_deviation(a, b) <= tol; }

double pow_n(int n, int e) { return std::pow(static_cast<double>(n), e); }

GluedTriangulation perturb(GluedTriangulation tri, std::mt19937_64& rng, int moves) {
    for (int m = 0; m < moves; ++m) {
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
    return tri;
}

std::vector<RootOfUnity> random_coboundary_data(int n, int order, std::mt19937_64& rng) {
    std::vector<RootOfUnity> b(n, RootOfUnity::one());
    for (int x = 1; x < n; ++x) b[x] = RootOfUnity{static_cast<std::int64_t>(rng() % order), order}.reduced();
    return b;
}

std::vector<std::uint64_t> lifted_histogram(const std::vector<std::uint64_t>& h, int target_order) {
    const int from = static_cast<int>(h.size());
    std::vector<std::uint64_t> out(target_order, 0);
    for (int k = 0; k < from; ++k) out[static_cast<std::size_t>(k) * (target_order / from)] += h[k];
    return out;
}

bool same_exact(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    const std::size_t n = std::lcm(a.size(), b.size());
    return lifted_histogram(a, static_cast<int>(n)) == lifted_histogram(b, static_cast<int>(n));
}

CheckResult timed(std::string id, std::string title, const std::function<void(Tally&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
        body(t);
    } catch (const std::exception& e) {
        t.expect(false, std::string("exception: ") + e.what());
    }
    CheckResult r;
    r.id = std::move(id);
    r.title = std::move(title);
    r.passed = t.passed();
    r.detail = t.detail();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::vector<std::string> catalog_groups() {
    std::vector<std::string> out;
    for (const auto& p : orientable_catalog())
        if (out.empty() || out.back() != p.group) out.push_back(p.group);
    return out;
}

// Orientable catalog plus the sign cocycles, deduplicated by (group, cocycle).
std::vector<CatalogPair> all_algebras() {
    std::vector<CatalogPair> out = orientable_catalog();
    for (const auto& p : sign_catalog()) {
        bool dup = false;
        for (const auto& q : out) dup = dup || (q.group == p.group && q.cocycle == p.cocycle);
        if (!dup) out.push_back(p);
    }
    return out;
}

void criterion1(Tally& t) {
    for (const auto& p : orientable_catalog()) {
        const TwoCocycle c = load(p);
        const TwistedGroupAlgebra a(c);
        const auto dec = wedderburn_decompose(a);
        for (int g = 1; g <= 3; ++g) {
            const auto s = SurfaceSpec::oriented(g);
            const auto start = std::chrono::steady_clock::now();
            const auto direct = dw_direct(c, s);
            const auto ver = verlinde(c.group(), dec, s);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            t.expect(close(direct, ver, 1e-8), where(p, s) + ": direct " + fmt(direct) + " vs formula " + fmt(ver));
            t.expect(secs < 60, where(p, s) + " took " + std::to_string(secs) + " s");
        }
    }
}

void criterion2(Tally& t) {
    for (const auto& p : orientable_catalog()) {
        const TwoCocycle c = load(p);
        const TwistedGroupAlgebra a(c);
        for (int g = 0; g <= 2; ++g) {
            const auto s = SurfaceSpec::oriented(g);
            const auto direct = dw_direct(c, s);
            const auto ss = pow_n(c.group().order(), -s.euler_characteristic()) *
                            fhk_state_sum(a, standard_triangulation(s)).value;
            t.expect(close(direct, ss, 1e-8), where(p, s) + ": direct " + fmt(direct) + " vs state sum " + fmt(ss));
        }
    }
}

void criterion3(Tally& t) {
    for (const auto& p : orientable_catalog()) {
        const TwoCocycle c = load(p);
        for (int g = 1; g <= 3; ++g) {
            const auto s = SurfaceSpec::oriented(g);
            const auto z = dw_direct(c, s);
            const double nearest = std::round(z.real());
            t.expect(std::abs(z - nearest) <= 1e-8 && nearest >= 1, where(p, s) + ": " + fmt(z) + " is not a positive integer");
            if (g == 1)
                t.expect(std::abs(z - static_cast<double>(c_regular_count(c))) <= 1e-8,
                         where(p, s) + ": torus value " + fmt(z) + " != r(G;c)");
        }
    }
    auto spot = [&](const CatalogPair& p, int g, double want) {
        const auto z = dw_direct(load(p), SurfaceSpec::oriented(g));
        t.expect(std::abs(z - want) <= 1e-8, where(p, SurfaceSpec::oriented(g)) + ": " + fmt(z) + " expected " + fmt(want));
    };
    spot({"symmetric:3", "trivial"}, 1, 3);
    spot({"product(cyclic:2,cyclic:2)", "heisenberg:2"}, 1, 1);
    spot({"product(cyclic:2,cyclic:2)", "heisenberg:2"}, 2, 4);
}

void criterion4(Tally& t) {
    for (const auto& name : catalog_groups()) {
        const GroupPtr g = make_group(name);
        for (int genus = 1; genus <= 3; ++genus) {
            const auto s = SurfaceSpec::oriented(genus);
            if (pow_n(g->order(), 2 * genus) > 1e8) {
                t.note(name + " genus " + std::to_string(genus) + " above brute-force cap");
                continue;
            }
            const auto formula = mednykh_count(*g, s);
            const auto brute = count_homs(*g, relator_presentation(s));
            t.expect(formula.value == static_cast<std::int64_t>(brute) && formula.residual <= 1e-6,
                     name + " genus " + std::to_string(genus) + ": formula " + std::to_string(formula.value) +
                         " vs count " + std::to_string(brute));
        }
    }
}

void criterion5(Tally& t) {
    for (const auto& p : all_algebras()) {
        const TwoCocycle c = load(p);
        const auto dec = wedderburn_decompose(TwistedGroupAlgebra(c));
        const int r = c_regular_count(c);
        t.expect(dec.sum_dim_squares() == c.group().order(),
                 p.group + "/" + p.cocycle + ": sum d^2 = " + std::to_string(dec.sum_dim_squares()));
        t.expect(dec.block_count() == r, p.group + "/" + p.cocycle + ": " + std::to_string(dec.block_count()) +
                                             " blocks, r = " + std::to_string(r));
    }
}

void criterion6(Tally& t, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const auto sphere = standard_triangulation(SurfaceSpec::sphere());
    std::vector<GluedTriangulation> spheres{sphere};
    for (int k = 1; k <= 5; ++k) spheres.push_back(perturb(sphere, rng, k));
    for (const auto& p : all_algebras()) {
        const TwistedGroupAlgebra a(load(p));
        for (std::size_t i = 0; i < spheres.size(); ++i) {
            t.expect(classify(spheres[i]) == SurfaceSpec::sphere(), "perturbed sphere changed topology");
            const auto v = fhk_state_sum(a, spheres[i]).value;
            t.expect(close(v, a.dimension(), 1e-8), p.group + "/" + p.cocycle + " sphere #" + std::to_string(i) + ": " +
                                                        fmt(v) + " != " + std::to_string(a.dimension()));
        }
    }
}

void criterion7(Tally& t) {
    const std::vector<SurfaceSpec> surfaces{SurfaceSpec::crosscaps(1), SurfaceSpec::crosscaps(2), SurfaceSpec::crosscaps(3)};
    for (const auto& p : sign_catalog()) {
        const TwoCocycle c = load(p);
        const TwistedGroupAlgebra a(c);
        const auto dec = with_fs_indicators(a, wedderburn_decompose(a));
        for (const auto& s : surfaces) {
            const auto direct = dw_direct(c, s);
            const auto ss = pow_n(a.dimension(), -s.euler_characteristic()) * star_state_sum(a, standard_triangulation(s)).value;
            const auto ver = verlinde(c.group(), dec, s);
            t.expect(close(direct, ss, 1e-8) && close(direct, ver, 1e-8),
                     where(p, s) + ": direct " + fmt(direct) + ", state sum " + fmt(ss) + ", formula " + fmt(ver));
            if (s.genus >= 2) {
                const double nearest = std::round(direct.real());
                t.expect(std::abs(direct - nearest) <= 1e-8, where(p, s) + ": " + fmt(direct) + " is not an integer");
                t.expect(nearest >= 0, where(p, s) + ": " + fmt(direct) + " is negative");
            }
        }
    }
    auto spot = [&](const CatalogPair& p, double want) {
        const auto z = dw_direct(load(p), SurfaceSpec::crosscaps(1));
        t.expect(std::abs(z - want) <= 1e-8, where(p, SurfaceSpec::crosscaps(1)) + ": " + fmt(z) + " expected " + fmt(want));
    };
    spot({"product(cyclic:2,cyclic:2)", "heisenberg:2"}, 0.5);
    spot({"cyclic:2", "trivial"}, 1.0);
}

void criterion8(Tally& t) {
    std::vector<CatalogPair> pairs = sign_catalog();
    for (const auto& p : orientable_catalog())
        if (p.cocycle == "trivial") pairs.push_back(p);
    for (const auto& p : pairs) {
        const TwoCocycle c = load(p);
        const TwistedGroupAlgebra a(c);
        const auto dec = with_fs_indicators(a, wedderburn_decompose(a));
        int lhs = 0;
        for (const auto& b : dec.blocks) lhs += fs_value(b.fs) * b.dim;
        int rhs = 0;
        for (Element g : involution_set(c.group())) rhs += c.value(g, g).is_one() ? 1 : -1;
        t.expect(lhs == rhs, p.group + "/" + p.cocycle + ": sum eps d = " + std::to_string(lhs) + ", involution sum = " +
                                 std::to_string(rhs));
        if (p.group == "quaternion:8" && p.cocycle == "trivial") t.expect(lhs == 2, "Q8 trivial: sum eps d != 2");
    }
}

void criterion9(Tally& t, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    // Pachner invariance on torus and genus 2
    for (const auto& p : orientable_catalog()) {
        const TwistedGroupAlgebra a(load(p));
        for (int g = 1; g <= 2; ++g) {
            const auto base = standard_triangulation(SurfaceSpec::oriented(g));
            const auto ref = fhk_state_sum(a, base).value;
            const int variants = g == 1 ? 3 : 2;
            for (int k = 1; k <= variants; ++k) {
                const auto moved = perturb(base, rng, k);
                const auto v = fhk_state_sum(a, moved).value;
                t.expect(close(ref, v, 1e-8), where(p, SurfaceSpec::oriented(g)) + " after " + std::to_string(k) +
                                                  " moves: " + fmt(v) + " vs " + fmt(ref));
            }
        }
    }
    // Coboundary invariance
    for (const auto& p : orientable_catalog()) {
        const TwoCocycle c = load(p);
        const TwistedGroupAlgebra a(c);
        const auto torus = standard_triangulation(SurfaceSpec::oriented(1));
        const auto d1 = dw_direct_detailed(c, SurfaceSpec::oriented(1));
        const auto d2 = dw_direct_detailed(c, SurfaceSpec::oriented(2));
        const auto s1 = fhk_state_sum(a, torus);
        for (int i = 0; i < 20; ++i) {
            const auto tw = twist(c, random_coboundary_data(c.group().order(), 2 * c.order(), rng));
            const TwistedGroupAlgebra ta(tw);
            const auto e1 = dw_direct_detailed(tw, SurfaceSpec::oriented(1));
            const auto e2 = dw_direct_detailed(tw, SurfaceSpec::oriented(2));
            const auto u1 = fhk_state_sum(ta, torus);
            t.expect(same_exact(d1.histogram, e1.histogram) && same_exact(d2.histogram, e2.histogram),
                     p.group + "/" + p.cocycle + ": direct weights changed under a twist");
            t.expect(close(d2.value, e2.value, 1e-10), p.group + "/" + p.cocycle + ": direct value changed under a twist");
            t.expect(same_exact(s1.histogram, u1.histogram) && close(s1.value, u1.value, 1e-10),
                     p.group + "/" + p.cocycle + ": state sum changed under a twist");
        }
    }
    for (const auto& p : sign_catalog()) {
        const TwoCocycle c = load(p);
        const TwistedGroupAlgebra a(c);
        for (const auto& s : {SurfaceSpec::crosscaps(1), SurfaceSpec::crosscaps(2)}) {
            const auto tri = standard_triangulation(s);
            const auto d = dw_direct_detailed(c, s);
            const auto st = star_state_sum(a, tri);
            for (int i = 0; i < 20; ++i) {
                const auto tw = twist(c, random_coboundary_data(c.group().order(), 2, rng));
                const auto e = dw_direct_detailed(tw, s);
                const auto u = star_state_sum(TwistedGroupAlgebra(tw), tri);
                t.expect(same_exact(d.histogram, e.histogram) && close(d.value, e.value, 1e-10),
                         where(p, s) + ": direct value changed under a sign twist");
                t.expect(same_exact(st.histogram, u.histogram) && close(st.value, u.value, 1e-10),
                         where(p, s) + ": *-state sum changed under a sign twist");
            }
        }
    }
    // Orientation-flip invariance of the *-state sum
    for (const auto& p : sign_catalog()) {
        const TwistedGroupAlgebra a(load(p));
        for (const auto& s : {SurfaceSpec::crosscaps(1), SurfaceSpec::crosscaps(2), SurfaceSpec::crosscaps(3),
                              SurfaceSpec::oriented(1)}) {
            const auto tri = standard_triangulation(s);
            const auto ref = star_state_sum(a, tri).value;
            if (s.orientable)
                t.expect(close(ref, fhk_state_sum(a, tri).value, 1e-8), where(p, s) + ": *-state sum != state sum");
            for (int k = 0; k < tri.triangle_count(); ++k) {
                const auto v = star_state_sum(a, flip_triangle(tri, k)).value;
                t.expect(close(ref, v, 1e-8), where(p, s) + ": flipping triangle " + std::to_string(k) + " gives " +
                                                  fmt(v) + " vs " + fmt(ref));
            }
        }
    }
}

void criterion10(Tally& t) {
    const GroupPtr s3 = make_group("symmetric:3");
    for (Element rep : conjugacy_classes(*s3).representatives) {
        const auto b = boundary_hom_count(*s3, 1, {rep});
        t.expect(b.formula.value == static_cast<std::int64_t>(b.brute_conjugate),
                 "S3 g=1 class of " + std::to_string(rep) + ": formula " + std::to_string(b.formula.value) + " vs " +
                     std::to_string(b.brute_conjugate));
    }
    const GroupPtr z2 = make_group("cyclic:2");
    for (Element x = 0; x < 2; ++x)
        for (Element y = 0; y < 2; ++y) {
            const auto b = boundary_hom_count(*z2, 0, {x, y});
            t.expect(b.formula.value == static_cast<std::int64_t>(b.brute_conjugate),
                     "Z/2 g=0 (" + std::to_string(x) + "," + std::to_string(y) + "): formula " +
                         std::to_string(b.formula.value) + " vs " + std::to_string(b.brute_conjugate));
        }
    const auto xx = boundary_hom_count(*z2, 0, {1, 1});
    t.expect(xx.brute_conjugate == 1, "Z/2 g=0 (x,x) brute force != 1");
}

}  // namespace

std::vector<CatalogPair> orientable_catalog() {
    std::vector<CatalogPair> out;
    for (int n = 1; n <= 6; ++n) out.push_back({"cyclic:" + std::to_string(n), "trivial"});
    out.push_back({"symmetric:3", "trivial"});
    out.push_back({"quaternion:8", "trivial"});
    out.push_back({"dihedral:8", "trivial"});
    out.push_back({"product(cyclic:2,cyclic:2)", "heisenberg:2"});
    out.push_back({"product(cyclic:3,cyclic:3)", "heisenberg:3"});
    return out;
}

std::vector<CatalogPair> sign_catalog() {
    std::vector<CatalogPair> out;
    for (const std::string g : {"product(cyclic:2,cyclic:2)", "cyclic:2", "cyclic:4"}) {
        const auto cat = sign_cocycles_catalog(make_group(g));
        for (const auto& c : cat.cocycles) out.push_back({g, c.label()});
    }
    out.push_back({"cyclic:3", "trivial"});
    out.push_back({"quaternion:8", "trivial"});
    return out;
}

CheckResult run_criterion(int id, std::uint64_t seed) {
    const std::string sid = std::to_string(id);
    switch (id) {
        case 1: return timed(sid, "orientable formula vs direct count, genus 1-3", criterion1);
        case 2: return timed(sid, "state sum vs direct count, genus 0-2", criterion2);
        case 3: return timed(sid, "integrality and torus values", criterion3);
        case 4: return timed(sid, "homomorphism-count formula vs brute force", criterion4);
        case 5: return timed(sid, "block dimensions and block count", criterion5);
        case 6: return timed(sid, "sphere state sum equals dim A", [&](Tally& t) { criterion6(t, seed); });
        case 7: return timed(sid, "non-orientable direct vs *-state sum vs formula", criterion7);
        case 8: return timed(sid, "sum of eps d vs involution sum", criterion8);
        case 9: return timed(sid, "invariance under moves and coboundary twists", [&](Tally& t) { criterion9(t, seed); });
        case 10: return timed(sid, "boundary character formula vs brute force", criterion10);
        default: throw std::out_of_range("no criterion " + sid);
    }
}

CheckResult run_labeling_check() {
    return timed("labeling", "labeling sums on small simplicial surfaces", [](Tally& t) {
        const std::vector<CatalogPair> pairs{{"cyclic:2", "trivial"},
                                             {"cyclic:3", "trivial"},
                                             {"symmetric:3", "trivial"},
                                             {"product(cyclic:2,cyclic:2)", "heisenberg:2"},
                                             {"cyclic:2", "sign:1"},
                                             {"cyclic:4", "sign:1"}};
        const std::vector<std::pair<SimplicialSurface, SurfaceSpec>> surfaces{
            {tetrahedron_sphere(), SurfaceSpec::sphere()},
            {seven_vertex_torus(), SurfaceSpec::oriented(1)},
            {six_vertex_projective_plane(), SurfaceSpec::crosscaps(1)}};
        for (const auto& p : pairs) {
            const TwoCocycle c = load(p);
            for (const auto& [m, s] : surfaces) {
                if (!s.orientable && !c.is_sign_valued()) continue;
                const auto want = dw_direct(c, s);
                const auto got = dw_labeling_oracle(c, m);
                t.expect(close(want, got, 1e-8), where(p, s) + ": labeling sum " + fmt(got) + " vs direct " + fmt(want));
            }
        }
    });
}

std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed) {
    std::vector<int> ids;
    bool labeling = false;
    if (name == "theorems") ids = {1, 2, 3, 7};
    else if (name == "oracles") ids = {4, 5, 8, 10}, labeling = true;
    else if (name == "invariance") ids = {6, 9};
    else if (name == "all") ids = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, labeling = true;
    else throw std::invalid_argument("unknown suite '" + name + "' (theorems, oracles, invariance, all)");
    std::vector<CheckResult> out;
    for (int id : ids) out.push_back(run_criterion(id, seed));
    if (labeling) out.push_back(run_labeling_check());
    return out;
}

CrossCheckOptions options_for_methods(const std::vector<std::string>& methods) {
    CrossCheckOptions o;
    o.direct = o.statesum = o.verlinde = o.oracle = false;
    for (const auto& m : methods) {
        if (m == "direct") o.direct = true;
        else if (m == "statesum") o.statesum = true;
        else if (m == "verlinde") o.verlinde = true;
        else if (m == "oracle") o.oracle = true;
        else if (m == "all") o.direct = o.statesum = o.verlinde = true;
        else throw std::invalid_argument("unknown method '" + m + "'");
    }
    return o;
}

SuiteConfig suite_config_from_json(const Json& j) {
    SuiteConfig cfg;
    try {
        for (const auto& e : j.at("entries")) {
            SuiteEntry s;
            s.group = e.at("group").get<std::string>();
            s.cocycle = e.value("cocycle", std::string("trivial"));
            s.surface = e.at("surface").get<std::string>();
            s.methods = e.value("methods", std::vector<std::string>{"all"});
            s.tolerance = e.value("tolerance", 1e-8);
            s.seed = e.value("seed", std::uint64_t{0});
            if (!(s.tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
            parse_cocycle(s.cocycle, make_group(s.group));
            parse_surface(s.surface);
            options_for_methods(s.methods);
            cfg.entries.push_back(std::move(s));
        }
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed suite config: ") + e.what());
    }
    return cfg;
}

SuiteConfig read_suite_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config " + path);
    try {
        return suite_config_from_json(Json::parse(in));
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed suite config: ") + e.what());
    }
}

std::vector<InvariantReport> run_config(const SuiteConfig& cfg, int workers) {
    std::vector<InvariantReport> out;
    for (const auto& e : cfg.entries) {
        CrossCheckOptions o = options_for_methods(e.methods);
        o.tolerance = e.tolerance;
        o.seed = e.seed;
        o.workers = workers;
        out.push_back(cross_check(parse_cocycle(e.cocycle, make_group(e.group)), parse_surface(e.surface), o));
    }
    return out;
}

}  // namespace dw
