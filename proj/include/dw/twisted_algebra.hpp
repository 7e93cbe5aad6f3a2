#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "dw/cocycle.hpp"

namespace dw {

using Scalar = std::complex<double>;

/// Coefficients on the group basis; entry g is the coefficient of basis vector g.
using AlgebraElement = std::vector<Scalar>;

class DecompositionError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Small helpers on coefficient vectors.
AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement subtract(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement scale(const AlgebraElement& a, Scalar s);
double max_abs(const AlgebraElement& a);
double distance(const AlgebraElement& a, const AlgebraElement& b);

/// One term coefficient * (left (x) right) of the pairing vector.
struct PairingTerm {
    Element left;
    Element right;
    Scalar coefficient;
};

/// Twisted group algebra over C: g1 . g2 = c(g1,g2) g1g2.
class TwistedGroupAlgebra {
  public:
    /// Throws CocycleError if `c` fails verify_cocycle.
    explicit TwistedGroupAlgebra(TwoCocycle c);

    const FiniteGroup& group() const { return cocycle_.group(); }
    const TwoCocycle& cocycle() const { return cocycle_; }
    int dimension() const { return group().order(); }

    AlgebraElement zero() const;
    AlgebraElement unit() const;
    AlgebraElement basis(Element g) const;

    AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;
    AlgebraElement multiply_basis(Element g, const AlgebraElement& b) const;

    /// T(a) = #G times the identity coefficient.
    Scalar trace(const AlgebraElement& a) const;
    /// Trace of x -> a x computed from the full left-multiplication matrix.
    Scalar literal_trace(const AlgebraElement& a) const;

    /// v = (#G)^-1 sum_g c(g,g^-1)^-1 g (x) g^-1
    std::vector<PairingTerm> pairing_vector() const;

    /// The involution g* = c(g,g^-1) g^-1 exists only for {+1,-1}-valued cocycles.
    bool has_star() const { return cocycle_.is_sign_valued(); }
    AlgebraElement star(const AlgebraElement& a) const;

    Scalar structure(Element a, Element b) const { return values_[static_cast<std::size_t>(a) * dimension() + b]; }

  private:
    TwoCocycle cocycle_;
    std::vector<Scalar> values_;  // complex embedding of the cocycle table
};

/// Basis of the center, from the null space of z -> (g z - z g) over all basis g.
/// Throws DecompositionError if a singular value lands in the ambiguous band [1e-8, 1e-6).
std::vector<AlgebraElement> center_basis(const TwistedGroupAlgebra& a);

enum class FsIndicator { not_computed, real, quaternionic, complex };

/// +1, -1, 0; throws for not_computed.
int fs_value(FsIndicator fs);
const char* fs_name(FsIndicator fs);

struct WedderburnBlock {
    AlgebraElement idempotent;
    int dim = 0;
    std::vector<Scalar> character;  // chi(g) for every g
    FsIndicator fs = FsIndicator::not_computed;
};

struct DecompositionDiagnostics {
    double dim_residual = 0;         // max |T(e) - d^2|
    double idempotent_error = 0;     // max |e^2 - e|
    double orthogonality_error = 0;  // max |e_i e_j|
    double centrality_error = 0;     // max |g e - e g|
    double unit_error = 0;           // |sum e - 1|
    double character_residual = 0;   // max |chi(g) - T(g e)/d|
    int attempts = 0;
};

struct WedderburnDecomposition {
    std::vector<WedderburnBlock> blocks;
    DecompositionDiagnostics diagnostics;

    int block_count() const { return static_cast<int>(blocks.size()); }
    int sum_dim_squares() const;
};

/// Primitive central idempotents by eigenprojection of a random central
/// element (fixed seed), block dimensions from T(e) = d^2, and characters
/// from the left ideal A e. Blocks are sorted by (dim, character).
WedderburnDecomposition wedderburn_decompose(const TwistedGroupAlgebra& a, std::uint64_t seed = 0);

/// chi_lambda(g): trace of left multiplication by g on A e_lambda, divided by d_lambda.
Scalar block_character(const TwistedGroupAlgebra& a, const WedderburnDecomposition& dec, int block, Element g);

/// Fills in the Frobenius-Schur type of every block from the involution.
/// Requires has_star().
WedderburnDecomposition with_fs_indicators(const TwistedGroupAlgebra& a, WedderburnDecomposition dec);

/// Dimension of {x in e A : x* = x} for the block of a self-dual idempotent.
int symmetric_subspace_dimension(const TwistedGroupAlgebra& a, const AlgebraElement& idempotent);

}  // namespace dw
