#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dw/state_sum.hpp"
#include "dw/surface.hpp"
#include "dw/twisted_algebra.hpp"

namespace dw {

class InvariantError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// One group element per generator of a relator presentation.
using HomAssignment = std::vector<Element>;

/// Calls `visit` for every assignment whose relator evaluates to the identity,
/// in lexicographic order of the generator values.
void enumerate_homs(const FiniteGroup& g, const RelatorPresentation& pres,
                    const std::function<void(const HomAssignment&)>& visit);
std::uint64_t count_homs(const FiniteGroup& g, const RelatorPresentation& pres, int workers = 1);

/// Exponent (mod c.order()) of the weight of a hom; throws InvariantError if the relator fails.
int orientable_weight_exponent(const TwoCocycle& c, const RelatorPresentation& pres, const HomAssignment& hom);
int nonorientable_weight_exponent(const TwoCocycle& c, const RelatorPresentation& pres, const HomAssignment& hom);

std::complex<double> cocycle_weight_orientable(const TwoCocycle& c, const RelatorPresentation& pres, const HomAssignment& hom);
/// Requires a {+1,-1}-valued cocycle.
int cocycle_weight_nonorientable(const TwoCocycle& c, const RelatorPresentation& pres, const HomAssignment& hom);

struct DirectResult {
    std::complex<double> value;
    std::uint64_t hom_count = 0;
    /// value = histogram[k] zeta_N^k summed, divided by #G.
    std::vector<std::uint64_t> histogram;
};

DirectResult dw_direct_detailed(const TwoCocycle& c, const SurfaceSpec& spec, int workers = 1);
DirectResult dw_direct_detailed(const TwoCocycle& c, const RelatorPresentation& pres, int workers = 1);
std::complex<double> dw_direct(const TwoCocycle& c, const SurfaceSpec& spec, int workers = 1);

/// Labeling sum over a simplicial surface with vertices ordered by index.
/// Orientable inputs must be coherently oriented; non-orientable inputs need
/// a {+1,-1}-valued cocycle. Throws InvariantError when the number of
/// admissible labelings would exceed `max_labelings`.
std::complex<double> dw_labeling_oracle(const TwoCocycle& c, const SimplicialSurface& m,
                                        double max_labelings = 5e7);

/// (#G)^-chi sum over blocks of d^chi, or of (eps d)^chi over self-dual blocks
/// for non-orientable surfaces.
std::complex<double> verlinde(const FiniteGroup& g, const WedderburnDecomposition& dec, const SurfaceSpec& spec);

struct IntegerEvaluation {
    std::int64_t value = 0;
    double raw = 0;
    double residual = 0;
};

/// #G sum over irreducible representations of (#G/d)^-chi, rounded.
IntegerEvaluation mednykh_count(const FiniteGroup& g, const SurfaceSpec& spec, std::uint64_t seed = 0);

struct BoundaryCount {
    IntegerEvaluation formula;         // counts boundary images conjugate to the g_i
    double printed = 0;                // sum without the class-size factors
    std::uint64_t brute_conjugate = 0; // tuples with c_j conjugate to g_j
    std::uint64_t brute_exact = 0;     // tuples with c_j = g_j
};

/// Homomorphisms from the fundamental group of the genus-g surface with k
/// boundary circles, boundary circle j sent into the class of g_j.
BoundaryCount boundary_hom_count(const FiniteGroup& g, int genus, const std::vector<Element>& boundary,
                                 std::uint64_t seed = 0);

struct CrossCheckOptions {
    bool direct = true;
    bool statesum = true;
    bool verlinde = true;
    bool oracle = false;
    double tolerance = 1e-8;
    std::uint64_t seed = 0;
    int workers = 1;
};

struct InvariantReport {
    SurfaceSpec surface;
    std::string group;
    std::string cocycle;
    std::optional<std::complex<double>> direct;
    std::optional<std::complex<double>> labeling_oracle;
    std::optional<std::complex<double>> statesum;  // (#G)^-chi times the state sum
    std::optional<std::complex<double>> verlinde;
    double max_deviation = 0;
    bool integrality_checked = false;
    std::int64_t nearest_integer = 0;
    double integer_residual = 0;
    bool integrality_ok = true;
    int block_count = 0;
    int sum_dim_squares = 0;
    int regular_classes = 0;
    bool wedderburn_ok = true;
    double tolerance = 1e-8;
    std::vector<std::string> notes;

    bool passed() const;
};

double relative_deviation(std::complex<double> a, std::complex<double> b);

InvariantReport cross_check(const TwoCocycle& c, const SurfaceSpec& spec, const CrossCheckOptions& opts = {});

}  // namespace dw
