#include "dw/cocycle.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

namespace dw {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
    const std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

int parse_positive(std::string_view s, std::string_view context) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0)
        throw CocycleError("bad integer in cocycle spec '" + std::string(context) + "'");
    return v;
}

TwoCocycle sign_table(GroupPtr g, const std::string& label, auto&& is_minus) {
    const int n = g->order();
    std::vector<int> e(static_cast<std::size_t>(n) * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) e[static_cast<std::size_t>(a) * n + b] = is_minus(a, b) ? 1 : 0;
    return TwoCocycle(std::move(g), 2, std::move(e), label);
}

// The eight bilinear forms B(a,b) = x a1 b1 + y a2 b2 + z a2 b1 over F2 on
// (Z/2)^2. Alternating forms are coboundaries mod 2, so these represent
// all of H^2((Z/2)^2; Z/2).
std::vector<TwoCocycle> klein_forms(const GroupPtr& klein) {
    std::vector<TwoCocycle> out;
    for (int mask = 0; mask < 8; ++mask) {
        const int x = mask & 1, y = (mask >> 1) & 1, z = (mask >> 2) & 1;
        out.push_back(sign_table(klein, "sign:" + std::to_string(mask), [=](Element a, Element b) {
            const int a1 = a % 2, a2 = a / 2, b1 = b % 2, b2 = b / 2;
            return ((x * a1 * b1 + y * a2 * b2 + z * a2 * b1) & 1) != 0;
        }));
    }
    return out;
}

}  // namespace

RootOfUnity RootOfUnity::reduced() const {
    const std::int64_t k = mod(numerator, order);
    const std::int64_t g = std::gcd(k, order);
    return {k / g, order / g};
}

RootOfUnity RootOfUnity::inverse() const { return {mod(-numerator, order), order}; }

RootOfUnity RootOfUnity::lifted(std::int64_t new_order) const {
    if (new_order % order != 0) throw CocycleError("cannot lift root of unity to a non-multiple order");
    return {mod(numerator, order) * (new_order / order), new_order};
}

std::complex<double> RootOfUnity::to_complex() const { return root_of_unity(numerator, order); }

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    const std::int64_t n = std::lcm(a.order, b.order);
    return RootOfUnity{mod(a.lifted(n).numerator + b.lifted(n).numerator, n), n}.reduced();
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
    const RootOfUnity x = a.reduced(), y = b.reduced();
    return x.numerator == y.numerator && x.order == y.order;
}

std::complex<double> root_of_unity(std::int64_t k, std::int64_t n) {
    k = mod(k, n);
    if (k == 0) return {1.0, 0.0};
    if (4 * k == n) return {0.0, 1.0};
    if (2 * k == n) return {-1.0, 0.0};
    if (4 * k == 3 * n) return {0.0, -1.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

TwoCocycle::TwoCocycle(GroupPtr group, int order, std::vector<int> exponents, std::string label)
    : group_(std::move(group)), order_(order), exps_(std::move(exponents)), label_(std::move(label)) {
    if (!group_) throw CocycleError("cocycle needs a group");
    if (order_ <= 0) throw CocycleError("root-of-unity order must be positive");
    const auto n = static_cast<std::size_t>(group_->order());
    if (exps_.size() != n * n) throw CocycleError("cocycle table has wrong size");
    for (int& e : exps_) e = static_cast<int>(mod(e, order_));
}

TwoCocycle TwoCocycle::trivial(GroupPtr group) {
    const auto n = static_cast<std::size_t>(group->order());
    return TwoCocycle(std::move(group), 1, std::vector<int>(n * n, 0), "trivial");
}

bool TwoCocycle::is_sign_valued() const {
    for (int e : exps_)
        if (e != 0 && 2 * e != order_) return false;
    return true;
}

TwoCocycle TwoCocycle::lifted(int new_order) const {
    if (new_order % order_ != 0) throw CocycleError("lifted order must be a multiple of the current order");
    std::vector<int> e(exps_);
    for (int& x : e) x *= new_order / order_;
    return TwoCocycle(group_, new_order, std::move(e), label_);
}

TwoCocycle TwoCocycle::with_value(Element a, Element b, RootOfUnity v) const {
    const int n = static_cast<int>(std::lcm<std::int64_t>(order_, v.order));
    TwoCocycle out = lifted(n);
    out.exps_[static_cast<std::size_t>(a) * group_->order() + b] = static_cast<int>(v.lifted(n).numerator);
    return out;
}

TwoCocycle TwoCocycle::relabeled(std::string label) const {
    TwoCocycle out = *this;
    out.label_ = std::move(label);
    return out;
}

CocycleVerdict verify_cocycle(const TwoCocycle& c) {
    const FiniteGroup& g = c.group();
    const int n = g.order();
    const int N = c.order();
    if (c.exponents().size() != static_cast<std::size_t>(n) * n)
        return {CocycleVerdict::Kind::shape, -1, -1, -1, "table size does not match group order"};
    for (Element x = 0; x < n; ++x) {
        if (c.exponent(x, 0) != 0 || c.exponent(0, x) != 0)
            return {CocycleVerdict::Kind::normalization, x, -1, -1,
                    "c(g,1) or c(1,g) differs from 1 at g=" + std::to_string(x)};
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element ab = g.mul(a, b);
            for (Element d = 0; d < n; ++d) {
                const int lhs = c.exponent(a, b) + c.exponent(ab, d);
                const int rhs = c.exponent(a, g.mul(b, d)) + c.exponent(b, d);
                if ((lhs - rhs) % N != 0)
                    return {CocycleVerdict::Kind::cocycle_identity, a, b, d,
                            "cocycle identity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(d) + ")"};
            }
        }
    return {};
}

TwoCocycle coboundary(GroupPtr group, const std::vector<RootOfUnity>& b) {
    const int n = group->order();
    if (static_cast<int>(b.size()) != n) throw CocycleError("coboundary needs one value per group element");
    if (!b[0].is_one()) throw CocycleError("coboundary requires b(1) = 1");
    std::int64_t N = 1;
    for (const auto& v : b) N = std::lcm(N, v.order);
    std::vector<int> e(static_cast<std::size_t>(n) * n);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) {
            const std::int64_t k =
                b[x].lifted(N).numerator + b[y].lifted(N).numerator - b[group->mul(x, y)].lifted(N).numerator;
            e[static_cast<std::size_t>(x) * n + y] = static_cast<int>(mod(k, N));
        }
    return TwoCocycle(std::move(group), static_cast<int>(N), std::move(e), "coboundary");
}

TwoCocycle product(const TwoCocycle& a, const TwoCocycle& b) {
    if (a.group_ptr() != b.group_ptr() && a.group().name() != b.group().name())
        throw CocycleError("cannot multiply cocycles on different groups");
    const int N = std::lcm(a.order(), b.order());
    const TwoCocycle x = a.lifted(N), y = b.lifted(N);
    std::vector<int> e(x.exponents());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = (e[i] + y.exponents()[i]) % N;
    return TwoCocycle(a.group_ptr(), N, std::move(e), a.label());
}

TwoCocycle twist(const TwoCocycle& c, const std::vector<RootOfUnity>& b) {
    return product(c, coboundary(c.group_ptr(), b)).relabeled(c.label() + "+twist");
}

TwoCocycle pullback(const TwoCocycle& c, GroupPtr source, const std::vector<Element>& map) {
    const int n = source->order();
    if (static_cast<int>(map.size()) != n) throw CocycleError("pullback map has wrong length");
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
            if (map[source->mul(x, y)] != c.group().mul(map[x], map[y]))
                throw CocycleError("pullback map is not a homomorphism");
    std::vector<int> e(static_cast<std::size_t>(n) * n);
    for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) e[static_cast<std::size_t>(x) * n + y] = c.exponent(map[x], map[y]);
    return TwoCocycle(std::move(source), c.order(), std::move(e), c.label());
}

TwoCocycle heisenberg_cocycle(int n) {
    if (n < 2) throw CocycleError("heisenberg cocycle needs n >= 2");
    const std::string name = "cyclic:" + std::to_string(n);
    return heisenberg_cocycle(make_group("product(" + name + "," + name + ")"), n);
}

TwoCocycle heisenberg_cocycle(GroupPtr group, int n) {
    if (n < 2) throw CocycleError("heisenberg cocycle needs n >= 2");
    const std::string cyc = "cyclic:" + std::to_string(n);
    if (group->name() != "product(" + cyc + "," + cyc + ")")
        throw CocycleError("heisenberg:" + std::to_string(n) + " needs group product(" + cyc + "," + cyc + "), got " +
                           group->name());
    const int order = n * n;
    std::vector<int> e(static_cast<std::size_t>(order) * order);
    for (Element a = 0; a < order; ++a)
        for (Element b = 0; b < order; ++b) e[static_cast<std::size_t>(a) * order + b] = ((a / n) * (b % n)) % n;
    return TwoCocycle(std::move(group), n, std::move(e), "heisenberg:" + std::to_string(n));
}

SignCatalog sign_cocycles_catalog(GroupPtr group) {
    SignCatalog cat;
    const std::string& name = group->name();
    const std::string klein_name = "product(cyclic:2,cyclic:2)";

    if (name == "cyclic:2") {
        cat.cocycles.push_back(TwoCocycle::trivial(group).relabeled("sign:0"));
        cat.cocycles.push_back(sign_table(group, "sign:1", [](Element a, Element b) { return a == 1 && b == 1; }));
    } else if (name == "cyclic:4") {
        cat.cocycles.push_back(TwoCocycle::trivial(group).relabeled("sign:0"));
        // carry cocycle of Z/8 -> Z/4
        cat.cocycles.push_back(sign_table(group, "sign:1", [](Element a, Element b) { return a + b >= 4; }));
    } else if (name == klein_name) {
        cat.cocycles = klein_forms(group);
    } else if (name == "dihedral:8" || name == "quaternion:8") {
        // pull the Klein-group forms back along G -> G/Z(G) = (Z/2)^2
        const GroupPtr klein = make_group(klein_name);
        std::vector<Element> map(8);
        for (Element x = 0; x < 8; ++x)
            map[x] = name == "dihedral:8" ? (x % 4) % 2 + 2 * (x / 4) : x % 4;
        for (const TwoCocycle& form : klein_forms(klein)) cat.cocycles.push_back(pullback(form, group, map));
    } else {
        cat.warning = "no sign-cocycle catalog for group " + name;
    }
    return cat;
}

CRegularity c_regularity(const TwoCocycle& c) {
    const FiniteGroup& g = c.group();
    const int n = g.order();
    CRegularity out;
    out.element_regular.assign(n, true);
    for (Element x = 0; x < n; ++x)
        for (Element h = 0; h < n; ++h)
            if (g.commute(x, h) && c.exponent(x, h) != c.exponent(h, x)) {
                out.element_regular[x] = false;
                break;
            }
    const ConjugacyClasses cc = conjugacy_classes(g);
    for (int k = 0; k < cc.count(); ++k) {
        const bool rep = out.element_regular[cc.representatives[k]];
        for (Element x = 0; x < n; ++x)
            if (cc.class_of[x] == k && out.element_regular[x] != rep) out.class_invariant = false;
        if (rep) ++out.class_count;
    }
    return out;
}

int c_regular_count(const TwoCocycle& c) { return c_regularity(c).class_count; }

bool five_term_identity_holds(const TwoCocycle& c) {
    const FiniteGroup& g = c.group();
    const int N = c.order();
    for (Element a = 0; a < g.order(); ++a)
        for (Element b = 0; b < g.order(); ++b) {
            const Element ab = g.mul(a, b);
            const int lhs = c.exponent(ab, g.inv(ab));
            const int rhs = c.exponent(a, g.inv(a)) + c.exponent(b, g.inv(b)) + c.exponent(a, b) +
                            c.exponent(g.inv(b), g.inv(a));
            if ((lhs - rhs) % N != 0) return false;
        }
    return true;
}

TwoCocycle parse_cocycle(std::string_view spec, GroupPtr group) {
    if (spec == "trivial") return TwoCocycle::trivial(std::move(group));
    if (spec.starts_with("heisenberg:"))
        return heisenberg_cocycle(std::move(group), parse_positive(spec.substr(11), spec));
    if (spec.starts_with("sign:")) {
        const int idx = parse_positive(spec.substr(5), spec);
        SignCatalog cat = sign_cocycles_catalog(group);
        if (!cat.warning.empty()) throw CocycleError(cat.warning);
        if (idx >= static_cast<int>(cat.cocycles.size()))
            throw CocycleError("sign catalog of " + group->name() + " has " + std::to_string(cat.cocycles.size()) +
                               " entries");
        return cat.cocycles[idx];
    }
    if (spec.starts_with("file:")) {
        const std::string path(spec.substr(5));
        std::ifstream in(path);
        if (!in) throw CocycleError("cannot open cocycle file " + path);
        return read_cocycle(in, std::move(group), std::string(spec));
    }
    throw CocycleError("unknown cocycle spec '" + std::string(spec) + "'");
}

TwoCocycle read_cocycle(std::istream& in, GroupPtr group, std::string label) {
    std::string keyword;
    int N = 0;
    if (!(in >> keyword >> N) || keyword != "order" || N <= 0) throw CocycleError("cocycle file must start with 'order N'");
    const int n = group->order();
    std::vector<int> e(static_cast<std::size_t>(n) * n, 0);
    std::vector<bool> seen(e.size(), false);
    int i = 0, j = 0;
    long long k = 0;
    std::size_t lines = 0;
    while (in >> i >> j >> k) {
        if (i < 0 || i >= n || j < 0 || j >= n) throw CocycleError("cocycle file index out of range");
        const auto idx = static_cast<std::size_t>(i) * n + j;
        if (seen[idx]) throw CocycleError("duplicate entry in cocycle file");
        seen[idx] = true;
        e[idx] = static_cast<int>(mod(k, N));
        ++lines;
    }
    if (!in.eof()) throw CocycleError("malformed line in cocycle file");
    if (lines != e.size())
        throw CocycleError("cocycle file has " + std::to_string(lines) + " entries, expected " + std::to_string(e.size()));
    return TwoCocycle(std::move(group), N, std::move(e), std::move(label));
}

void write_cocycle(std::ostream& out, const TwoCocycle& c) {
    const int n = c.group().order();
    out << "order " << c.order() << '\n';
    for (Element i = 0; i < n; ++i)
        for (Element j = 0; j < n; ++j) out << i << ' ' << j << ' ' << c.exponent(i, j) << '\n';
}

}  // namespace dw
