#include "dw/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <thread>

namespace dw {

namespace {

Element letter_value(const FiniteGroup& g, const Letter& l, const HomAssignment& hom) {
    return l.inverse ? g.inv(hom[l.generator]) : hom[l.generator];
}

// Prefix end after generators 0..j are known: first letter using a later generator.
std::vector<int> prefix_ends(const RelatorPresentation& pres) {
    std::vector<int> ends(pres.generator_count);
    const int m = static_cast<int>(pres.relator.size());
    for (int j = 0; j < pres.generator_count; ++j) {
        int p = 0;
        while (p < m && pres.relator[p].generator <= j) ++p;
        ends[j] = p;
    }
    return ends;
}

class HomEnumerator {
  public:
    HomEnumerator(const FiniteGroup& g, const RelatorPresentation& pres)
        : g_(g), pres_(pres), ends_(prefix_ends(pres)), hom_(pres.generator_count, 0) {}

    template <class Visit>
    void run(Visit&& visit, int worker = 0, int workers = 1) {
        if (pres_.trivial_group || pres_.generator_count == 0) {
            if (worker == 0) visit(hom_);
            return;
        }
        descend(0, 0, 0, visit, worker, workers);
    }

  private:
    template <class Visit>
    void descend(int j, int pos, Element prod, Visit& visit, int worker, int workers) {
        if (j == pres_.generator_count) {
            if (prod == 0) visit(hom_);
            return;
        }
        for (Element x = 0; x < g_.order(); ++x) {
            if (j == 0 && x % workers != worker) continue;
            hom_[j] = x;
            Element p = prod;
            for (int i = pos; i < ends_[j]; ++i) p = g_.mul(p, letter_value(g_, pres_.relator[i], hom_));
            descend(j + 1, ends_[j], p, visit, worker, workers);
        }
    }

    const FiniteGroup& g_;
    const RelatorPresentation& pres_;
    std::vector<int> ends_;
    HomAssignment hom_;
};

int chain_exponent(const TwoCocycle& c, const RelatorPresentation& pres, const HomAssignment& hom) {
    const FiniteGroup& g = c.group();
    if (static_cast<int>(hom.size()) != pres.generator_count) throw InvariantError("assignment has the wrong length");
    const int n_ord = c.order();
    long long exp = 0;
    Element h = 0;
    for (std::size_t i = 0; i < pres.relator.size(); ++i) {
        const Element x = letter_value(g, pres.relator[i], hom);
        if (i > 0) exp += c.exponent(h, x);
        h = g.mul(h, x);
    }
    if (h != 0) throw InvariantError("assignment does not satisfy the relator");
    return static_cast<int>(exp % n_ord);
}

std::complex<double> histogram_value(const std::vector<std::uint64_t>& hist, int order) {
    std::complex<double> acc = 0;
    for (int k = 0; k < order; ++k)
        if (hist[k]) acc += static_cast<double>(hist[k]) * root_of_unity(k, order);
    return acc;
}

WedderburnDecomposition trivial_decomposition(const FiniteGroup& g, std::uint64_t seed) {
    auto gp = std::make_shared<const FiniteGroup>(g);
    return wedderburn_decompose(TwistedGroupAlgebra(TwoCocycle::trivial(gp)), seed);
}

IntegerEvaluation round_checked(double raw, const std::string& what) {
    IntegerEvaluation r;
    r.raw = raw;
    r.value = std::llround(raw);
    r.residual = std::abs(raw - static_cast<double>(r.value));
    if (r.residual > 1e-6) throw InvariantError(what + " is not an integer (residual " + std::to_string(r.residual) + ")");
    return r;
}

}  // namespace

void enumerate_homs(const FiniteGroup& g, const RelatorPresentation& pres,
                    const std::function<void(const HomAssignment&)>& visit) {
    HomEnumerator(g, pres).run(visit);
}

std::uint64_t count_homs(const FiniteGroup& g, const RelatorPresentation& pres, int workers) {
    workers = std::clamp(workers, 1, g.order());
    std::vector<std::uint64_t> counts(workers, 0);
    auto job = [&](int w) { HomEnumerator(g, pres).run([&](const HomAssignment&) { ++counts[w]; }, w, workers); };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(job, w);
        for (auto& t : pool) t.join();
    }
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    return total;
}

int orientable_weight_exponent(const TwoCocycle& c, const RelatorPresentation& pres, const HomAssignment& hom) {
    if (!pres.orientable) throw InvariantError("orientable weight needs an orientable presentation");
    long long exp = chain_exponent(c, pres, hom);
    const FiniteGroup& g = c.group();
    for (int x = 0; x < pres.generator_count; ++x) exp += c.order() - c.exponent(hom[x], g.inv(hom[x]));
    return static_cast<int>(exp % c.order());
}

int nonorientable_weight_exponent(const TwoCocycle& c, const RelatorPresentation& pres, const HomAssignment& hom) {
    if (pres.orientable) throw InvariantError("non-orientable weight needs a non-orientable presentation");
    if (!c.is_sign_valued()) throw InvariantError("non-orientable weight needs a {+1,-1}-valued cocycle");
    return chain_exponent(c, pres, hom);
}

std::complex<double> cocycle_weight_orientable(const TwoCocycle& c, const RelatorPresentation& pres, const HomAssignment& hom) {
    return root_of_unity(orientable_weight_exponent(c, pres, hom), c.order());
}

int cocycle_weight_nonorientable(const TwoCocycle& c, const RelatorPresentation& pres, const HomAssignment& hom) {
    return nonorientable_weight_exponent(c, pres, hom) == 0 ? 1 : -1;
}

DirectResult dw_direct_detailed(const TwoCocycle& c, const RelatorPresentation& pres, int workers) {
    if (!pres.orientable && !c.is_sign_valued())
        throw InvariantError("non-orientable surfaces need a {+1,-1}-valued cocycle");
    const FiniteGroup& g = c.group();
    workers = std::clamp(workers, 1, g.order());
    std::vector<std::vector<std::uint64_t>> hists(workers, std::vector<std::uint64_t>(c.order(), 0));
    auto job = [&](int w) {
        HomEnumerator(g, pres).run(
            [&](const HomAssignment& hom) {
                const int e = pres.orientable ? orientable_weight_exponent(c, pres, hom) : chain_exponent(c, pres, hom);
                ++hists[w][e];
            },
            w, workers);
    };
    if (workers == 1) {
        job(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(job, w);
        for (auto& t : pool) t.join();
    }
    DirectResult r;
    r.histogram.assign(c.order(), 0);
    for (const auto& h : hists)
        for (int k = 0; k < c.order(); ++k) r.histogram[k] += h[k];
    for (auto v : r.histogram) r.hom_count += v;
    r.value = histogram_value(r.histogram, c.order()) / static_cast<double>(g.order());
    return r;
}

DirectResult dw_direct_detailed(const TwoCocycle& c, const SurfaceSpec& spec, int workers) {
    return dw_direct_detailed(c, relator_presentation(spec), workers);
}

std::complex<double> dw_direct(const TwoCocycle& c, const SurfaceSpec& spec, int workers) {
    return dw_direct_detailed(c, spec, workers).value;
}

std::complex<double> dw_labeling_oracle(const TwoCocycle& c, const SimplicialSurface& m, double max_labelings) {
    validate_simplicial(m);
    const FiniteGroup& g = c.group();
    const int n = g.order();
    const bool orientable = simplicial_orientable(m);
    if (orientable && !to_glued(m).consistently_oriented())
        throw InvariantError("labeling sum needs coherently oriented triangles");
    if (!orientable && !c.is_sign_valued()) throw InvariantError("non-orientable labeling sum needs a {+1,-1}-valued cocycle");

    const int chi = m.euler_characteristic();
    const double bound = std::pow(static_cast<double>(n), m.vertex_count - 1 + (2 - chi));
    if (bound > max_labelings)
        throw InvariantError("labeling sum too large (" + std::to_string(bound) + " admissible labelings)");

    std::map<std::pair<int, int>, int> edge_id;
    auto edge = [&](int u, int v) {
        auto key = std::pair{std::min(u, v), std::max(u, v)};
        auto it = edge_id.find(key);
        if (it != edge_id.end()) return it->second;
        const int id = static_cast<int>(edge_id.size());
        edge_id.emplace(key, id);
        return id;
    };
    struct Tri {
        int ab, bc, ac;
        bool positive;
    };
    std::vector<Tri> tris;
    for (const auto& t : m.triangles) {
        std::array<int, 3> s = t;
        std::sort(s.begin(), s.end());
        const int ia = static_cast<int>(std::find(t.begin(), t.end(), s[0]) - t.begin());
        const bool positive = t[(ia + 1) % 3] == s[1];
        tris.push_back({edge(s[0], s[1]), edge(s[1], s[2]), edge(s[0], s[2]), positive});
    }
    const int e_count = static_cast<int>(edge_id.size());
    const int N = c.order();
    std::vector<std::uint64_t> hist(N, 0);

    // ell(AC) = ell(AB) ell(BC); returns false on a contradiction.
    auto propagate = [&](std::vector<Element>& lab) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (const Tri& t : tris) {
                Element& ab = lab[t.ab];
                Element& bc = lab[t.bc];
                Element& ac = lab[t.ac];
                const int unknown = (ab < 0) + (bc < 0) + (ac < 0);
                if (unknown == 0) {
                    if (g.mul(ab, bc) != ac) return false;
                } else if (unknown == 1) {
                    if (ac < 0) ac = g.mul(ab, bc);
                    else if (ab < 0) ab = g.mul(ac, g.inv(bc));
                    else bc = g.mul(g.inv(ab), ac);
                    changed = true;
                }
            }
        }
        return true;
    };
    auto descend = [&](auto&& self, std::vector<Element> lab) -> void {
        if (!propagate(lab)) return;
        const auto next = std::find(lab.begin(), lab.end(), -1);
        if (next == lab.end()) {
            long long exp = 0;
            for (const Tri& t : tris) {
                const int v = c.exponent(lab[t.ab], lab[t.bc]);
                exp += (orientable && !t.positive) ? N - v : v;
            }
            ++hist[exp % N];
            return;
        }
        const auto idx = next - lab.begin();
        for (Element x = 0; x < n; ++x) {
            lab[idx] = x;
            self(self, lab);
        }
    };
    descend(descend, std::vector<Element>(e_count, -1));
    return histogram_value(hist, N) * std::pow(static_cast<double>(n), -m.vertex_count);
}

std::complex<double> verlinde(const FiniteGroup& g, const WedderburnDecomposition& dec, const SurfaceSpec& spec) {
    const int chi = spec.euler_characteristic();
    double sum = 0;
    for (const auto& b : dec.blocks) {
        if (spec.orientable) {
            sum += std::pow(static_cast<double>(b.dim), chi);
        } else {
            if (b.fs == FsIndicator::not_computed) throw InvariantError("Frobenius-Schur indicators were not computed");
            const int eps = fs_value(b.fs);
            if (eps != 0) sum += std::pow(static_cast<double>(eps * b.dim), chi);
        }
    }
    return sum * std::pow(static_cast<double>(g.order()), -chi);
}

IntegerEvaluation mednykh_count(const FiniteGroup& g, const SurfaceSpec& spec, std::uint64_t seed) {
    if (!spec.orientable) throw InvariantError("the homomorphism-count formula is for orientable surfaces");
    const auto dec = trivial_decomposition(g, seed);
    const double n = g.order();
    const int chi = spec.euler_characteristic();
    double raw = 0;
    for (const auto& b : dec.blocks) raw += std::pow(n / b.dim, -chi);
    return round_checked(n * raw, "homomorphism-count formula");
}

BoundaryCount boundary_hom_count(const FiniteGroup& g, int genus, const std::vector<Element>& boundary, std::uint64_t seed) {
    if (genus < 0) throw InvariantError("genus must be non-negative");
    if (boundary.empty()) throw InvariantError("at least one boundary element is required");
    for (Element b : boundary)
        if (b < 0 || b >= g.order()) throw InvariantError("boundary element out of range");
    const int k = static_cast<int>(boundary.size());
    const int chi = 2 - 2 * genus - k;
    const double n = g.order();
    const auto classes = conjugacy_classes(g);
    const auto dec = trivial_decomposition(g, seed);

    BoundaryCount out;
    std::complex<double> corrected = 0, printed = 0;
    for (const auto& b : dec.blocks) {
        const double lead = std::pow(n / b.dim, -chi);
        std::complex<double> prod_c = 1, prod_p = 1;
        for (Element x : boundary) {
            prod_p *= b.character[x];
            prod_c *= b.character[x] * (classes.sizes[classes.class_of[x]] / n);
        }
        corrected += lead * prod_c;
        printed += lead * prod_p;
    }
    out.printed = n * printed.real();
    out.formula = round_checked(n * corrected.real(), "boundary formula");

    double tuples = std::pow(n, 2 * genus);
    for (Element x : boundary) tuples *= classes.sizes[classes.class_of[x]];
    if (tuples > 1e8) throw InvariantError("brute-force boundary count too large");

    std::vector<std::vector<Element>> members(k);
    for (int j = 0; j < k; ++j)
        for (Element y = 0; y < g.order(); ++y)
            if (classes.class_of[y] == classes.class_of[boundary[j]]) members[j].push_back(y);

    std::vector<Element> cs(k);
    auto boundary_loop = [&](auto&& self, int j, Element prod) -> void {
        if (j == k) {
            if (prod != 0) return;
            ++out.brute_conjugate;
            if (cs == boundary) ++out.brute_exact;
            return;
        }
        for (Element y : members[j]) {
            cs[j] = y;
            self(self, j + 1, g.mul(prod, y));
        }
    };
    auto handle_loop = [&](auto&& self, int i, Element prod) -> void {
        if (i == genus) {
            boundary_loop(boundary_loop, 0, prod);
            return;
        }
        for (Element a = 0; a < g.order(); ++a)
            for (Element b = 0; b < g.order(); ++b) {
                const Element comm = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
                self(self, i + 1, g.mul(prod, comm));
            }
    };
    handle_loop(handle_loop, 0, 0);
    return out;
}

double relative_deviation(std::complex<double> a, std::complex<double> b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    const double diff = std::abs(a - b);
    return scale < 1e-12 ? diff : diff / scale;
}

bool InvariantReport::passed() const {
    return max_deviation <= tolerance && integrality_ok && wedderburn_ok;
}

InvariantReport cross_check(const TwoCocycle& c, const SurfaceSpec& spec, const CrossCheckOptions& opts) {
    const FiniteGroup& g = c.group();
    InvariantReport r;
    r.surface = spec;
    r.group = g.name();
    r.cocycle = c.label();
    r.tolerance = opts.tolerance;

    const TwistedGroupAlgebra alg(c);
    const bool star = alg.has_star();
    const int chi = spec.euler_characteristic();
    const double scale = std::pow(static_cast<double>(g.order()), -chi);

    WedderburnDecomposition dec = wedderburn_decompose(alg, opts.seed);
    if (star) dec = with_fs_indicators(alg, std::move(dec));
    r.block_count = dec.block_count();
    r.sum_dim_squares = dec.sum_dim_squares();
    r.regular_classes = c_regular_count(c);
    r.wedderburn_ok = r.sum_dim_squares == g.order() && r.block_count == r.regular_classes;

    const bool nonorientable_blocked = !spec.orientable && !c.is_sign_valued();
    if (nonorientable_blocked) r.notes.push_back("cocycle is not {+1,-1}-valued; non-orientable routes skipped");

    if (opts.direct && !nonorientable_blocked) r.direct = dw_direct(c, spec, opts.workers);
    if (opts.statesum && !nonorientable_blocked) {
        const auto tri = standard_triangulation(spec);
        const StateSumOptions so{opts.workers};
        const auto res = spec.orientable ? fhk_state_sum(alg, tri, so) : star_state_sum(alg, tri, so);
        r.statesum = scale * res.value;
    }
    if (opts.verlinde && !nonorientable_blocked) r.verlinde = verlinde(g, dec, spec);
    if (opts.oracle && !nonorientable_blocked) {
        std::optional<SimplicialSurface> m;
        if (spec == SurfaceSpec::sphere()) m = tetrahedron_sphere();
        else if (spec == SurfaceSpec::oriented(1)) m = seven_vertex_torus();
        else if (spec == SurfaceSpec::crosscaps(1)) m = six_vertex_projective_plane();
        if (!m) {
            r.notes.push_back("no labeling triangulation for this surface");
        } else {
            try {
                r.labeling_oracle = dw_labeling_oracle(c, *m);
            } catch (const InvariantError& e) {
                r.notes.push_back(std::string("labeling sum skipped: ") + e.what());
            }
        }
    }

    std::vector<std::complex<double>> values;
    for (const auto* v : {&r.direct, &r.labeling_oracle, &r.statesum, &r.verlinde})
        if (*v) values.push_back(**v);
    for (std::size_t i = 0; i < values.size(); ++i)
        for (std::size_t j = i + 1; j < values.size(); ++j)
            r.max_deviation = std::max(r.max_deviation, relative_deviation(values[i], values[j]));

    if (chi <= 0 && !values.empty()) {
        const std::complex<double> ref = values.front();
        r.integrality_checked = true;
        r.nearest_integer = std::llround(ref.real());
        r.integer_residual = std::abs(ref - std::complex<double>(static_cast<double>(r.nearest_integer), 0.0));
        const std::int64_t floor_value = spec.orientable ? 1 : 0;
        r.integrality_ok = r.integer_residual <= opts.tolerance && r.nearest_integer >= floor_value;
    }
    return r;
}

}  // namespace dw
