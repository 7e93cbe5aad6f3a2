#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "dw/group.hpp"

namespace dw {

class CocycleError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// exp(2 pi i * numerator / order), kept exact.
struct RootOfUnity {
    std::int64_t numerator = 0;
    std::int64_t order = 1;

    static RootOfUnity one() { return {0, 1}; }
    static RootOfUnity minus_one() { return {1, 2}; }

    RootOfUnity reduced() const;
    RootOfUnity inverse() const;
    RootOfUnity lifted(std::int64_t new_order) const;  // new_order must be a multiple of order
    std::complex<double> to_complex() const;
    bool is_one() const { return numerator % order == 0; }

    friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b);
};

/// exp(2 pi i k / n) with the quarter turns returned exactly.
std::complex<double> root_of_unity(std::int64_t k, std::int64_t n);

/// A 2-cocycle on a finite group with values in the N-th roots of unity,
/// stored as an n x n table of exponents mod N. Construction only checks
/// shape; use verify_cocycle for the cocycle identity and normalization.
class TwoCocycle {
  public:
    TwoCocycle(GroupPtr group, int order, std::vector<int> exponents, std::string label);

    static TwoCocycle trivial(GroupPtr group);

    const FiniteGroup& group() const { return *group_; }
    const GroupPtr& group_ptr() const { return group_; }
    int order() const { return order_; }
    const std::string& label() const { return label_; }

    int exponent(Element a, Element b) const { return exps_[static_cast<std::size_t>(a) * group_->order() + b]; }
    RootOfUnity value(Element a, Element b) const { return {exponent(a, b), order_}; }
    std::complex<double> complex_value(Element a, Element b) const { return root_of_unity(exponent(a, b), order_); }

    /// Every value is +1 or -1.
    bool is_sign_valued() const;
    TwoCocycle lifted(int new_order) const;
    TwoCocycle with_value(Element a, Element b, RootOfUnity v) const;
    TwoCocycle relabeled(std::string label) const;

    const std::vector<int>& exponents() const { return exps_; }

  private:
    GroupPtr group_;
    int order_;
    std::vector<int> exps_;
    std::string label_;
};

struct CocycleVerdict {
    enum class Kind { ok, shape, normalization, cocycle_identity };
    Kind kind = Kind::ok;
    Element g1 = -1, g2 = -1, g3 = -1;
    std::string message;

    bool ok() const { return kind == Kind::ok; }
};

/// Exact check of normalization and c(a,b)c(ab,c) = c(a,bc)c(b,c).
CocycleVerdict verify_cocycle(const TwoCocycle& c);

/// delta b(g1,g2) = b(g1) b(g2) / b(g1 g2). Requires b(identity) = 1.
TwoCocycle coboundary(GroupPtr group, const std::vector<RootOfUnity>& b);
/// Pointwise product c * delta b, in the lcm of the orders involved.
TwoCocycle twist(const TwoCocycle& c, const std::vector<RootOfUnity>& b);
/// Pointwise product of two cocycles on the same group.
TwoCocycle product(const TwoCocycle& a, const TwoCocycle& b);
/// c composed with a group homomorphism `map` : G -> H (given as a table).
TwoCocycle pullback(const TwoCocycle& c_on_target, GroupPtr source, const std::vector<Element>& map);

/// c((a1,a2),(b1,b2)) = zeta_n^(a2 b1) on (Z/n)^2, element (a1,a2) at index a1 + n*a2.
TwoCocycle heisenberg_cocycle(int n);
/// Same cocycle, bound to an existing group that must be product(cyclic:n,cyclic:n).
TwoCocycle heisenberg_cocycle(GroupPtr group, int n);

struct SignCatalog {
    std::vector<TwoCocycle> cocycles;
    std::string warning;  // non-empty when the group is not in the catalog
};

/// Hand-curated {+1,-1}-valued cocycles (trivial first) for Z/2, Z/4,
/// (Z/2)^2, D4 and Q8.
SignCatalog sign_cocycles_catalog(GroupPtr group);

struct CRegularity {
    std::vector<bool> element_regular;
    int class_count = 0;           // r(G;c)
    bool class_invariant = true;   // regularity constant on every conjugacy class
};

CRegularity c_regularity(const TwoCocycle& c);
int c_regular_count(const TwoCocycle& c);

/// c(ab,(ab)^-1) = c(a,a^-1) c(b,b^-1) c(a,b) c(b^-1,a^-1) for all a,b.
bool five_term_identity_holds(const TwoCocycle& c);

/// `trivial`, `heisenberg:<n>`, `sign:<index>` or `file:<path>`.
TwoCocycle parse_cocycle(std::string_view spec, GroupPtr group);

/// Text format: `order N` then n^2 lines `i j k`.
TwoCocycle read_cocycle(std::istream& in, GroupPtr group, std::string label);
void write_cocycle(std::ostream& out, const TwoCocycle& c);

}  // namespace dw
