#include "dw/twisted_algebra.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <random>

namespace dw {

namespace {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

constexpr double kNullCutoff = 1e-8;
constexpr double kAmbiguousCeiling = 1e-6;
constexpr double kClusterTolerance = 1e-8;
constexpr double kRoundingTolerance = 1e-6;
constexpr int kMaxAttempts = 5;

Vector to_eigen(const AlgebraElement& a) {
    Vector v(static_cast<Eigen::Index>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) v(static_cast<Eigen::Index>(i)) = a[i];
    return v;
}

AlgebraElement from_eigen(const Vector& v) { return AlgebraElement(v.data(), v.data() + v.size()); }

// Number of singular values above the cutoff; throws if any sits in the
// band where zero and non-zero cannot be told apart.
Eigen::Index numerical_rank(const Eigen::VectorXd& sigma, const char* what) {
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        const double s = sigma(i);
        if (s >= kNullCutoff && s < kAmbiguousCeiling)
            throw DecompositionError(std::string(what) + ": singular value " + std::to_string(s) +
                                     " inside the ambiguous band [1e-8, 1e-6); tolerance review needed");
        if (s >= kAmbiguousCeiling) ++rank;
    }
    return rank;
}

Matrix left_matrix(const TwistedGroupAlgebra& a, Element g) {
    const int n = a.dimension();
    Matrix m = Matrix::Zero(n, n);
    for (Element h = 0; h < n; ++h) m(a.group().mul(g, h), h) = a.structure(g, h);
    return m;
}

// Orthonormal basis (columns) of the two-sided ideal e A for a central idempotent e.
Matrix ideal_basis(const TwistedGroupAlgebra& a, const AlgebraElement& e, int expected_rank) {
    const int n = a.dimension();
    Matrix right(n, n);
    for (Element h = 0; h < n; ++h) right.col(h) = to_eigen(a.multiply(a.basis(h), e));
    Eigen::JacobiSVD<Matrix> svd(right, Eigen::ComputeThinU);
    const Eigen::Index rank = numerical_rank(svd.singularValues(), "ideal basis");
    if (rank != expected_rank)
        throw DecompositionError("ideal A e has rank " + std::to_string(rank) + ", expected d^2 = " +
                                 std::to_string(expected_rank));
    return svd.matrixU().leftCols(rank);
}

Matrix star_matrix(const TwistedGroupAlgebra& a) {
    const int n = a.dimension();
    Matrix s = Matrix::Zero(n, n);
    for (Element g = 0; g < n; ++g) s(a.group().inv(g), g) = a.structure(g, a.group().inv(g));
    return s;
}

// Portable uniform in [-1, 1) from a 64-bit engine.
double symmetric_uniform(std::mt19937_64& rng) {
    return 2.0 * static_cast<double>(rng() >> 11) * 0x1.0p-53 - 1.0;
}

bool character_less(const WedderburnBlock& x, const WedderburnBlock& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    for (std::size_t g = 0; g < x.character.size(); ++g) {
        const double xr = std::round(x.character[g].real() * 1e6), yr = std::round(y.character[g].real() * 1e6);
        if (xr != yr) return xr > yr;
        const double xi = std::round(x.character[g].imag() * 1e6), yi = std::round(y.character[g].imag() * 1e6);
        if (xi != yi) return xi > yi;
    }
    return false;
}

}  // namespace

AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

AlgebraElement subtract(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

AlgebraElement scale(const AlgebraElement& a, Scalar s) {
    AlgebraElement out(a);
    for (Scalar& x : out) x *= s;
    return out;
}

double max_abs(const AlgebraElement& a) {
    double m = 0;
    for (const Scalar& x : a) m = std::max(m, std::abs(x));
    return m;
}

double distance(const AlgebraElement& a, const AlgebraElement& b) { return max_abs(subtract(a, b)); }

TwistedGroupAlgebra::TwistedGroupAlgebra(TwoCocycle c) : cocycle_(std::move(c)) {
    const CocycleVerdict verdict = verify_cocycle(cocycle_);
    if (!verdict.ok()) throw CocycleError("not a normalized 2-cocycle: " + verdict.message);
    const int n = dimension();
    values_.resize(static_cast<std::size_t>(n) * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) values_[static_cast<std::size_t>(a) * n + b] = cocycle_.complex_value(a, b);
}

AlgebraElement TwistedGroupAlgebra::zero() const { return AlgebraElement(dimension(), Scalar{}); }

AlgebraElement TwistedGroupAlgebra::unit() const { return basis(0); }

AlgebraElement TwistedGroupAlgebra::basis(Element g) const {
    AlgebraElement e = zero();
    e[g] = 1.0;
    return e;
}

AlgebraElement TwistedGroupAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const {
    const int n = dimension();
    if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("algebra element has wrong length");
    AlgebraElement out = zero();
    for (Element g = 0; g < n; ++g) {
        if (a[g] == Scalar{}) continue;
        for (Element h = 0; h < n; ++h) {
            if (b[h] == Scalar{}) continue;
            out[group().mul(g, h)] += a[g] * b[h] * structure(g, h);
        }
    }
    return out;
}

AlgebraElement TwistedGroupAlgebra::multiply_basis(Element g, const AlgebraElement& b) const {
    AlgebraElement out = zero();
    for (Element h = 0; h < dimension(); ++h) out[group().mul(g, h)] += b[h] * structure(g, h);
    return out;
}

Scalar TwistedGroupAlgebra::trace(const AlgebraElement& a) const { return static_cast<double>(dimension()) * a[0]; }

Scalar TwistedGroupAlgebra::literal_trace(const AlgebraElement& a) const {
    Scalar t{};
    for (Element h = 0; h < dimension(); ++h) t += multiply(a, basis(h))[h];
    return t;
}

std::vector<PairingTerm> TwistedGroupAlgebra::pairing_vector() const {
    std::vector<PairingTerm> v;
    const double inv_n = 1.0 / dimension();
    for (Element g = 0; g < dimension(); ++g) {
        const Element gi = group().inv(g);
        v.push_back({g, gi, std::conj(structure(g, gi)) * inv_n});
    }
    return v;
}

AlgebraElement TwistedGroupAlgebra::star(const AlgebraElement& a) const {
    if (!has_star()) throw CocycleError("involution needs a {+1,-1}-valued cocycle");
    AlgebraElement out = zero();
    for (Element g = 0; g < dimension(); ++g) {
        const Element gi = group().inv(g);
        out[gi] += a[g] * structure(g, gi);
    }
    return out;
}

std::vector<AlgebraElement> center_basis(const TwistedGroupAlgebra& a) {
    const int n = a.dimension();
    const FiniteGroup& g = a.group();
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(n) * n, n);
    for (Element x = 0; x < n; ++x) {
        const Eigen::Index row0 = static_cast<Eigen::Index>(x) * n;
        for (Element h = 0; h < n; ++h) {
            m(row0 + g.mul(x, h), h) += a.structure(x, h);
            m(row0 + g.mul(h, x), h) -= a.structure(h, x);
        }
    }
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinV);
    const Eigen::Index rank = numerical_rank(svd.singularValues(), "center basis");
    std::vector<AlgebraElement> basis;
    for (Eigen::Index k = rank; k < n; ++k) basis.push_back(from_eigen(svd.matrixV().col(k)));
    return basis;
}

int fs_value(FsIndicator fs) {
    switch (fs) {
        case FsIndicator::real: return 1;
        case FsIndicator::quaternionic: return -1;
        case FsIndicator::complex: return 0;
        case FsIndicator::not_computed: break;
    }
    throw DecompositionError("Frobenius-Schur indicator not computed");
}

const char* fs_name(FsIndicator fs) {
    switch (fs) {
        case FsIndicator::real: return "+1";
        case FsIndicator::quaternionic: return "-1";
        case FsIndicator::complex: return "0";
        case FsIndicator::not_computed: return "not_computed";
    }
    return "not_computed";
}

int WedderburnDecomposition::sum_dim_squares() const {
    int s = 0;
    for (const auto& b : blocks) s += b.dim * b.dim;
    return s;
}

WedderburnDecomposition wedderburn_decompose(const TwistedGroupAlgebra& a, std::uint64_t seed) {
    const int n = a.dimension();
    const std::vector<AlgebraElement> center = center_basis(a);
    const auto r = static_cast<Eigen::Index>(center.size());
    Matrix z(n, r);
    for (Eigen::Index k = 0; k < r; ++k) z.col(k) = to_eigen(center[k]);

    WedderburnDecomposition dec;
    std::vector<AlgebraElement> idempotents;
    for (int attempt = 0; attempt < kMaxAttempts && idempotents.empty(); ++attempt) {
        dec.diagnostics.attempts = attempt + 1;
        std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
        Vector coeffs(r);
        for (Eigen::Index k = 0; k < r; ++k) coeffs(k) = symmetric_uniform(rng);
        const AlgebraElement w = from_eigen(z * coeffs);

        // left multiplication by w restricted to the center, in the orthonormal basis z
        Matrix action(r, r);
        for (Eigen::Index k = 0; k < r; ++k) action.col(k) = z.adjoint() * to_eigen(a.multiply(w, center[k]));
        Eigen::ComplexEigenSolver<Matrix> eig(action);
        if (eig.info() != Eigen::Success) continue;

        const Vector& values = eig.eigenvalues();
        double scale_ref = 1.0;
        for (Eigen::Index i = 0; i < r; ++i) scale_ref = std::max(scale_ref, std::abs(values(i)));
        bool collision = false;
        for (Eigen::Index i = 0; i < r && !collision; ++i)
            for (Eigen::Index j = i + 1; j < r; ++j)
                if (std::abs(values(i) - values(j)) < kClusterTolerance * scale_ref) {
                    collision = true;
                    break;
                }
        if (collision) continue;

        for (Eigen::Index i = 0; i < r; ++i) {
            const AlgebraElement u = from_eigen(z * eig.eigenvectors().col(i));
            const AlgebraElement uu = a.multiply(u, u);
            // u = s e with e idempotent, so u^2 = s u
            Scalar num{}, den{};
            for (int k = 0; k < n; ++k) {
                num += uu[k] * std::conj(u[k]);
                den += u[k] * std::conj(u[k]);
            }
            idempotents.push_back(scale(u, den / num));
        }
    }
    if (idempotents.empty())
        throw DecompositionError("eigenvalue collision in generic central element after " +
                                 std::to_string(kMaxAttempts) + " attempts");

    DecompositionDiagnostics& diag = dec.diagnostics;
    AlgebraElement total = a.zero();
    for (std::size_t i = 0; i < idempotents.size(); ++i) {
        const AlgebraElement& e = idempotents[i];
        total = add(total, e);
        diag.idempotent_error = std::max(diag.idempotent_error, distance(a.multiply(e, e), e));
        for (std::size_t j = i + 1; j < idempotents.size(); ++j)
            diag.orthogonality_error = std::max(diag.orthogonality_error, max_abs(a.multiply(e, idempotents[j])));
        for (Element g = 0; g < n; ++g)
            diag.centrality_error =
                std::max(diag.centrality_error, distance(a.multiply(a.basis(g), e), a.multiply(e, a.basis(g))));

        const Scalar t = a.trace(e);
        const int d = static_cast<int>(std::lround(std::sqrt(std::max(t.real(), 0.0))));
        const double residual = std::abs(t - static_cast<double>(d * d));
        diag.dim_residual = std::max(diag.dim_residual, residual);
        if (d < 1 || residual > kRoundingTolerance)
            throw DecompositionError("block trace " + std::to_string(t.real()) + " is not a perfect square");

        WedderburnBlock block;
        block.idempotent = e;
        block.dim = d;
        const Matrix q = ideal_basis(a, e, d * d);
        block.character.resize(n);
        for (Element g = 0; g < n; ++g) {
            const Scalar chi = (q.adjoint() * left_matrix(a, g) * q).trace() / static_cast<double>(d);
            block.character[g] = chi;
            const Scalar via_trace = a.trace(a.multiply(a.basis(g), e)) / static_cast<double>(d);
            diag.character_residual = std::max(diag.character_residual, std::abs(chi - via_trace));
        }
        dec.blocks.push_back(std::move(block));
    }
    diag.unit_error = distance(total, a.unit());

    const double worst = std::max({diag.idempotent_error, diag.orthogonality_error, diag.centrality_error,
                                   diag.unit_error});
    if (worst > kClusterTolerance)
        throw DecompositionError("central idempotents violate their identities by " + std::to_string(worst));
    if (dec.sum_dim_squares() != n)
        throw DecompositionError("sum of squared block dimensions is " + std::to_string(dec.sum_dim_squares()) +
                                 ", expected " + std::to_string(n));

    std::sort(dec.blocks.begin(), dec.blocks.end(), character_less);
    return dec;
}

Scalar block_character(const TwistedGroupAlgebra& a, const WedderburnDecomposition& dec, int block, Element g) {
    if (block < 0 || block >= dec.block_count()) throw std::out_of_range("block index out of range");
    if (g < 0 || g >= a.dimension()) throw std::out_of_range("group element out of range");
    return dec.blocks[block].character[g];
}

int symmetric_subspace_dimension(const TwistedGroupAlgebra& a, const AlgebraElement& idempotent) {
    const Scalar t = a.trace(idempotent);
    const int d = static_cast<int>(std::lround(std::sqrt(std::max(t.real(), 0.0))));
    const Matrix q = ideal_basis(a, idempotent, d * d);
    const Matrix restricted = q.adjoint() * star_matrix(a) * q;
    // restricted squares to the identity, so (1 + *)/2 is a projection
    const double dim = 0.5 * (static_cast<double>(d * d) + restricted.trace().real());
    const long rounded = std::lround(dim);
    if (std::abs(dim - static_cast<double>(rounded)) > kRoundingTolerance)
        throw DecompositionError("symmetric subspace dimension " + std::to_string(dim) + " is not an integer");
    return static_cast<int>(rounded);
}

WedderburnDecomposition with_fs_indicators(const TwistedGroupAlgebra& a, WedderburnDecomposition dec) {
    if (!a.has_star()) throw CocycleError("Frobenius-Schur indicators need a {+1,-1}-valued cocycle");
    for (int i = 0; i < dec.block_count(); ++i) {
        WedderburnBlock& block = dec.blocks[i];
        const AlgebraElement image = a.star(block.idempotent);
        int partner = -1;
        for (int j = 0; j < dec.block_count(); ++j)
            if (distance(image, dec.blocks[j].idempotent) < kClusterTolerance) {
                partner = j;
                break;
            }
        if (partner < 0) throw DecompositionError("involution does not permute the central idempotents");
        if (partner != i) {
            block.fs = FsIndicator::complex;
            continue;
        }
        const int d = block.dim;
        const int sym = symmetric_subspace_dimension(a, block.idempotent);
        if (sym == d * (d + 1) / 2) block.fs = FsIndicator::real;
        else if (sym == d * (d - 1) / 2) block.fs = FsIndicator::quaternionic;
        else
            throw DecompositionError("symmetric subspace of a " + std::to_string(d) + "-dimensional block has dimension " +
                                     std::to_string(sym));
    }
    return dec;
}

}  // namespace dw
