#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "dw/surface.hpp"
#include "dw/twisted_algebra.hpp"

namespace dw {

class StateSumError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct PlanStep {
    int edge = -1;
    bool branched = true;   // false: value forced by a triangle constraint
    int forced_by = -1;     // triangle supplying the value when not branched
    int forced_slot = -1;   // slot of that triangle carrying the edge
    std::vector<int> completes;  // triangles whose three sides are known after this step
};

/// Edge order for the backtracking contraction. Deterministic for a given triangulation.
struct ContractionPlan {
    std::vector<PlanStep> steps;

    int branch_count() const;
    /// Upper bound on the number of visited states for a group of order n.
    double estimated_states(int group_order) const;
};

ContractionPlan plan_contraction(const GluedTriangulation& tri);

struct StateSumOptions {
    int workers = 1;
};

struct StateSumResult {
    std::complex<double> value;
    std::uint64_t states_visited = 0;
    ContractionPlan plan;
    /// Exact result: value = group_order^scale_exponent * sum_k histogram[k] zeta_N^k.
    std::vector<std::uint64_t> histogram;
    int scale_exponent = 0;
};

/// I_A(M) for A = A^(c). Inputs that are orientable but not consistently
/// oriented are re-oriented first; non-orientable inputs throw StateSumError.
StateSumResult fhk_state_sum(const TwistedGroupAlgebra& a, const GluedTriangulation& tri, StateSumOptions opts = {});

/// I_(A,*)(M) with arbitrary triangle orientations. Requires a {+1,-1}-valued cocycle.
StateSumResult star_state_sum(const TwistedGroupAlgebra& a, const GluedTriangulation& tri, StateSumOptions opts = {});

/// An algebra given by structure constants on a basis e_0..e_{m-1}:
/// e_i e_j = sum_k mult[(i*m+j)*m+k] e_k, with trace form T(e_k) = trace[k].
struct StructureAlgebra {
    int dim = 0;
    std::vector<Scalar> mult;
    std::vector<Scalar> trace;
    /// Optional linear involution, row-major: entry [k*dim+j] is the e_k coordinate of e_j^*.
    std::optional<std::vector<Scalar>> involution;

    Scalar structure(int i, int j, int k) const { return mult[(static_cast<std::size_t>(i) * dim + j) * dim + k]; }
};

/// Mat_d(C) on matrix units E_ab (index a*d+b) with the matrix trace scaled by d,
/// i.e. the trace of left multiplication.
StructureAlgebra matrix_algebra(int d);
StructureAlgebra with_transpose(StructureAlgebra a, int d);
/// Symplectic involution x -> J x^T J^-1 on Mat_d, d even.
StructureAlgebra with_symplectic(StructureAlgebra a, int d);
/// Structure constants of a twisted group algebra (with its involution when it exists).
StructureAlgebra from_twisted(const TwistedGroupAlgebra& a);

/// Dense contraction over basis indices. With `use_star`, gluings whose
/// reversal bit is false use (id (x) *)(v) and the involution must be present;
/// otherwise every gluing must be orientation-compatible.
std::complex<double> dense_state_sum(const StructureAlgebra& a, const GluedTriangulation& tri, bool use_star = false);

}  // namespace dw
