#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dw {

// Group elements are dense indices 0..n-1; index 0 is always the identity.
using Element = int;

class GroupError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A finite group stored as its Cayley table. Immutable once built; every
/// constructor path validates identity, inverses and associativity.
class FiniteGroup {
  public:
    static constexpr int kMaxOrder = 64;

    /// Validates `table` (row-major, table[a*n+b] = a*b) and builds the group.
    /// Throws GroupError on any violated axiom or when n exceeds kMaxOrder.
    static FiniteGroup from_table(std::string name, int order, std::vector<Element> table);

    int order() const { return order_; }
    const std::string& name() const { return name_; }
    Element identity() const { return 0; }

    Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    Element inv(Element a) const { return inverse_[a]; }
    Element pow(Element a, int k) const;
    Element conjugate(Element g, Element by) const { return mul(mul(by, g), inv(by)); }
    bool commute(Element a, Element b) const { return mul(a, b) == mul(b, a); }
    int element_order(Element a) const;

    std::span<const Element> table() const { return table_; }

  private:
    FiniteGroup(std::string name, int order, std::vector<Element> table, std::vector<Element> inverse)
        : name_(std::move(name)), order_(order), table_(std::move(table)), inverse_(std::move(inverse)) {}

    std::string name_;
    int order_;
    std::vector<Element> table_;
    std::vector<Element> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct ConjugacyClasses {
    std::vector<int> class_of;             // element -> class id
    std::vector<Element> representatives;  // smallest index in each class
    std::vector<int> sizes;

    int count() const { return static_cast<int>(sizes.size()); }
};

FiniteGroup cyclic_group(int n);
/// Dihedral group of the given order (2m), symmetries of an m-gon.
FiniteGroup dihedral_group(int order);
FiniteGroup quaternion_group();
FiniteGroup symmetric_group(int n);
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Parses `cyclic:4`, `dihedral:8`, `quaternion:8`, `symmetric:3`,
/// `product(cyclic:2,cyclic:2)` (products nest).
FiniteGroup parse_group(std::string_view descriptor);
GroupPtr make_group(std::string_view descriptor);

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);
std::vector<Element> involution_set(const FiniteGroup& g);
std::vector<Element> centralizer(const FiniteGroup& g, Element x);

}  // namespace dw
