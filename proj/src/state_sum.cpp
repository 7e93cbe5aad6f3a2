#include "dw/state_sum.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace dw {

namespace {

// Edges of the three slots of every triangle.
std::vector<std::array<int, 3>> triangle_edges(const GluedTriangulation& tri) {
    std::vector<std::array<int, 3>> out(tri.triangle_count());
    for (int t = 0; t < tri.triangle_count(); ++t)
        for (int s = 0; s < 3; ++s) out[t][s] = tri.edge_of(3 * t + s);
    return out;
}

struct PlanState {
    const std::vector<std::array<int, 3>>& slots;
    std::vector<bool> known;

    // Slot of `t` that can be forced now, or -1.
    int forced_slot(int t) const {
        const auto& e = slots[t];
        for (int s = 0; s < 3; ++s) {
            if (known[e[s]]) continue;
            const int a = e[(s + 1) % 3], b = e[(s + 2) % 3];
            if (a != e[s] && b != e[s] && known[a] && known[b]) return s;
        }
        return -1;
    }
    bool complete(int t) const { return known[slots[t][0]] && known[slots[t][1]] && known[slots[t][2]]; }

    // Repeatedly forces edges; returns the (triangle, slot) pairs in order.
    std::vector<std::pair<int, int>> propagate() {
        std::vector<std::pair<int, int>> forced;
        bool progress = true;
        while (progress) {
            progress = false;
            for (int t = 0; t < static_cast<int>(slots.size()); ++t) {
                const int s = forced_slot(t);
                if (s < 0) continue;
                known[slots[t][s]] = true;
                forced.push_back({t, s});
                progress = true;
                break;
            }
        }
        return forced;
    }
};

std::vector<int> newly_complete(const PlanState& st, const std::vector<bool>& was_complete) {
    std::vector<int> out;
    for (int t = 0; t < static_cast<int>(st.slots.size()); ++t)
        if (!was_complete[t] && st.complete(t)) out.push_back(t);
    return out;
}

class SparseContraction {
  public:
    SparseContraction(const TwistedGroupAlgebra& a, const GluedTriangulation& tri, ContractionPlan plan)
        : g_(a.group()), c_(a.cocycle()), tri_(tri), plan_(std::move(plan)), slots_(triangle_edges(tri)) {}

    StateSumResult run(int workers) {
        const int n = g_.order();
        workers = std::clamp(workers, 1, n);
        std::vector<std::vector<std::uint64_t>> hists(workers, std::vector<std::uint64_t>(c_.order(), 0));
        std::vector<std::uint64_t> visited(workers, 0);
        auto job = [&](int w) {
            Worker wk{*this, std::vector<Element>(tri_.edge_count(), -1), hists[w], visited[w], w, workers};
            wk.descend(0, 0);
        };
        if (workers == 1) {
            job(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(job, w);
            for (auto& th : pool) th.join();
        }

        StateSumResult r;
        r.histogram.assign(c_.order(), 0);
        for (int w = 0; w < workers; ++w) {
            for (int k = 0; k < c_.order(); ++k) r.histogram[k] += hists[w][k];
            r.states_visited += visited[w];
        }
        r.scale_exponent = tri_.triangle_count() - tri_.edge_count();
        std::complex<double> acc = 0;
        for (int k = 0; k < c_.order(); ++k)
            if (r.histogram[k]) acc += static_cast<double>(r.histogram[k]) * root_of_unity(k, c_.order());
        r.value = acc * std::pow(static_cast<double>(n), r.scale_exponent);
        r.plan = plan_;
        return r;
    }

  private:
    struct Worker {
        const SparseContraction& sc;
        std::vector<Element> value;
        std::vector<std::uint64_t>& hist;
        std::uint64_t& visited;
        int worker;
        int workers;

        Element flag_value(int flag) const {
            const int e = sc.tri_.edge_of(flag);
            const Element g = value[e];
            if (sc.tri_.edge_flags(e)[0] == flag || !sc.tri_.reversal(flag)) return g;
            return sc.g_.inv(g);
        }

        // Exponent contributed by assigning `g` to edge e, and the completed triangles.
        bool assign(const PlanStep& step, Element g, int& exp) {
            value[step.edge] = g;
            const int N = sc.c_.order();
            if (sc.tri_.reversal(sc.tri_.edge_flags(step.edge)[0])) exp += N - sc.c_.exponent(g, sc.g_.inv(g));
            for (int t : step.completes) {
                const Element h0 = flag_value(3 * t), h1 = flag_value(3 * t + 1), h2 = flag_value(3 * t + 2);
                const Element h01 = sc.g_.mul(h0, h1);
                if (sc.g_.mul(h01, h2) != 0) return false;
                exp += sc.c_.exponent(h0, h1) + sc.c_.exponent(h01, h2);
            }
            exp %= N;
            return true;
        }

        void descend(std::size_t i, int exp) {
            if (i == sc.plan_.steps.size()) {
                ++visited;
                ++hist[exp];
                return;
            }
            const PlanStep& step = sc.plan_.steps[i];
            if (step.branched) {
                for (Element g = 0; g < sc.g_.order(); ++g) {
                    if (i == 0 && g % workers != worker) continue;
                    int e = exp;
                    if (assign(step, g, e)) descend(i + 1, e);
                }
            } else {
                const int t = step.forced_by, s = step.forced_slot;
                const Element a = flag_value(3 * t + (s + 1) % 3), b = flag_value(3 * t + (s + 2) % 3);
                const Element h = sc.g_.inv(sc.g_.mul(a, b));
                const int flag = 3 * t + s;
                const bool direct = sc.tri_.edge_flags(step.edge)[0] == flag || !sc.tri_.reversal(flag);
                int e = exp;
                if (assign(step, direct ? h : sc.g_.inv(h), e)) descend(i + 1, e);
            }
            value[step.edge] = -1;
        }
    };

    const FiniteGroup& g_;
    const TwoCocycle& c_;
    const GluedTriangulation& tri_;
    ContractionPlan plan_;
    std::vector<std::array<int, 3>> slots_;
};

}  // namespace

int ContractionPlan::branch_count() const {
    return static_cast<int>(std::count_if(steps.begin(), steps.end(), [](const PlanStep& s) { return s.branched; }));
}

double ContractionPlan::estimated_states(int group_order) const {
    return std::pow(static_cast<double>(group_order), branch_count());
}

ContractionPlan plan_contraction(const GluedTriangulation& tri) {
    const auto slots = triangle_edges(tri);
    PlanState st{slots, std::vector<bool>(tri.edge_count(), false)};
    ContractionPlan plan;
    std::vector<bool> complete(tri.triangle_count(), false);

    auto record = [&](PlanStep step) {
        step.completes = newly_complete(st, complete);
        for (int t : step.completes) complete[t] = true;
        plan.steps.push_back(std::move(step));
    };

    for (;;) {
        bool progress = true;
        while (progress) {
            progress = false;
            for (int t = 0; t < tri.triangle_count() && !progress; ++t) {
                const int s = st.forced_slot(t);
                if (s < 0) continue;
                st.known[slots[t][s]] = true;
                record({slots[t][s], false, t, s, {}});
                progress = true;
            }
        }
        if (std::all_of(st.known.begin(), st.known.end(), [](bool k) { return k; })) break;

        int best = -1;
        std::pair<int, int> best_score{-1, -1};
        for (int e = 0; e < tri.edge_count(); ++e) {
            if (st.known[e]) continue;
            PlanState trial = st;
            trial.known[e] = true;
            const int forced = static_cast<int>(trial.propagate().size());
            int touched = 0;
            for (const auto& sl : slots) touched += (sl[0] == e) + (sl[1] == e) + (sl[2] == e);
            const std::pair<int, int> score{forced, touched};
            if (score > best_score) {
                best_score = score;
                best = e;
            }
        }
        st.known[best] = true;
        record({best, true, -1, -1, {}});
    }
    return plan;
}

StateSumResult fhk_state_sum(const TwistedGroupAlgebra& a, const GluedTriangulation& tri, StateSumOptions opts) {
    if (tri.consistently_oriented()) return SparseContraction(a, tri, plan_contraction(tri)).run(opts.workers);
    auto verdict = orientability_and_orientation(tri);
    if (!verdict.orientable) throw StateSumError("triangulation is not orientable; use the *-algebra state sum");
    return SparseContraction(a, *verdict.oriented, plan_contraction(*verdict.oriented)).run(opts.workers);
}

StateSumResult star_state_sum(const TwistedGroupAlgebra& a, const GluedTriangulation& tri, StateSumOptions opts) {
    if (!a.has_star()) throw StateSumError("the *-algebra state sum needs a {+1,-1}-valued cocycle");
    return SparseContraction(a, tri, plan_contraction(tri)).run(opts.workers);
}

}  // namespace dw
