#include "dw/group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <numeric>

namespace dw {

namespace {

FiniteGroup tabulate(std::string name, int n, const std::function<Element(Element, Element)>& op) {
    if (n <= 0) throw GroupError("group order must be positive: " + name);
    if (n > FiniteGroup::kMaxOrder)
        throw GroupError(name + " has order " + std::to_string(n) + ", above the cap of " +
                         std::to_string(FiniteGroup::kMaxOrder));
    std::vector<Element> table(static_cast<std::size_t>(n) * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = op(a, b);
    return FiniteGroup::from_table(std::move(name), n, std::move(table));
}

int parse_int(std::string_view s, std::string_view context) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw GroupError("bad integer '" + std::string(s) + "' in group descriptor " + std::string(context));
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name, int n, std::vector<Element> table) {
    if (n <= 0) throw GroupError("group order must be positive");
    if (n > kMaxOrder) throw GroupError("group order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder));
    if (table.size() != static_cast<std::size_t>(n) * n) throw GroupError("Cayley table has wrong size");
    auto at = [&](Element a, Element b) { return table[static_cast<std::size_t>(a) * n + b]; };

    for (Element v : table)
        if (v < 0 || v >= n) throw GroupError("Cayley table entry out of range");
    for (Element i = 0; i < n; ++i)
        if (at(0, i) != i || at(i, 0) != i) throw GroupError("index 0 is not a two-sided identity");

    std::vector<Element> inverse(n, -1);
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            if (at(a, b) == 0) {
                if (at(b, a) != 0) throw GroupError("left and right inverses differ");
                inverse[a] = b;
                break;
            }
        }
        if (inverse[a] < 0) throw GroupError("element " + std::to_string(a) + " has no inverse");
    }

    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element ab = at(a, b);
            for (Element c = 0; c < n; ++c)
                if (at(ab, c) != at(a, at(b, c)))
                    throw GroupError("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                     std::to_string(c) + ")");
        }

    return FiniteGroup(std::move(name), n, std::move(table), std::move(inverse));
}

Element FiniteGroup::pow(Element a, int k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    Element r = 0;
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

int FiniteGroup::element_order(Element a) const {
    int k = 1;
    for (Element x = a; x != 0; x = mul(x, a)) ++k;
    return k;
}

FiniteGroup cyclic_group(int n) {
    if (n <= 0) throw GroupError("cyclic group needs n >= 1");
    return tabulate("cyclic:" + std::to_string(n), n, [n](Element a, Element b) { return (a + b) % n; });
}

FiniteGroup dihedral_group(int order) {
    if (order <= 0 || order % 2 != 0) throw GroupError("dihedral group order must be a positive even number");
    const int m = order / 2;
    // r^k s^e  <->  k + m*e ;  (r^a s^e)(r^b s^f) = r^(a + (-1)^e b) s^(e+f)
    return tabulate("dihedral:" + std::to_string(order), order, [m](Element x, Element y) {
        const int a = x % m, e = x / m, b = y % m, f = y / m;
        const int k = ((e == 0 ? a + b : a - b) % m + m) % m;
        return k + m * ((e + f) % 2);
    });
}

FiniteGroup quaternion_group() {
    // units 1,i,j,k as 0..3; element = unit + 4*sign, so -1 has index 4
    static constexpr std::array<std::array<int, 4>, 4> unit{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
    static constexpr std::array<std::array<int, 4>, 4> sign{{{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
    return tabulate("quaternion:8", 8, [](Element x, Element y) {
        const int u = x % 4, v = y % 4;
        const int s = (x / 4 + y / 4 + sign[u][v]) % 2;
        return unit[u][v] + 4 * s;
    });
}

FiniteGroup symmetric_group(int n) {
    if (n <= 0) throw GroupError("symmetric group needs n >= 1");
    if (n > 5) throw GroupError("symmetric:" + std::to_string(n) + " is not supported (n <= 5)");
    int fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    if (fact > FiniteGroup::kMaxOrder)
        throw GroupError("symmetric:" + std::to_string(n) + " has order " + std::to_string(fact) +
                         ", above the cap of " + std::to_string(FiniteGroup::kMaxOrder));

    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<Element>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    // (sigma tau)(x) = sigma(tau(x))
    return tabulate("symmetric:" + std::to_string(n), fact, [&](Element a, Element b) {
        std::vector<int> q(n);
        for (int x = 0; x < n; ++x) q[x] = perms[a][perms[b][x]];
        return index_of(q);
    });
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int na = a.order();
    return tabulate("product(" + a.name() + "," + b.name() + ")", na * b.order(), [&](Element x, Element y) {
        return a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
    });
}

FiniteGroup parse_group(std::string_view descriptor) {
    const std::string_view d = trim(descriptor);
    if (d.starts_with("product(")) {
        if (!d.ends_with(")")) throw GroupError("unbalanced parentheses in " + std::string(d));
        const std::string_view inner = d.substr(8, d.size() - 9);
        int depth = 0;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            else if (inner[i] == ')') --depth;
            else if (inner[i] == ',' && depth == 0)
                return direct_product(parse_group(inner.substr(0, i)), parse_group(inner.substr(i + 1)));
        }
        throw GroupError("product needs two factors: " + std::string(d));
    }
    const auto colon = d.find(':');
    if (colon == std::string_view::npos) throw GroupError("unrecognized group descriptor '" + std::string(d) + "'");
    const std::string_view kind = d.substr(0, colon);
    const int n = parse_int(d.substr(colon + 1), d);
    if (kind == "cyclic") return cyclic_group(n);
    if (kind == "dihedral") return dihedral_group(n);
    if (kind == "symmetric") return symmetric_group(n);
    if (kind == "quaternion") {
        if (n != 8) throw GroupError("only quaternion:8 is supported");
        return quaternion_group();
    }
    throw GroupError("unknown group family '" + std::string(kind) + "'");
}

GroupPtr make_group(std::string_view descriptor) {
    return std::make_shared<const FiniteGroup>(parse_group(descriptor));
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& g) {
    const int n = g.order();
    ConjugacyClasses cc;
    cc.class_of.assign(n, -1);
    for (Element x = 0; x < n; ++x) {
        if (cc.class_of[x] >= 0) continue;
        const int id = cc.count();
        cc.representatives.push_back(x);
        cc.sizes.push_back(0);
        for (Element t = 0; t < n; ++t) {
            const Element y = g.conjugate(x, t);
            if (cc.class_of[y] < 0) {
                cc.class_of[y] = id;
                ++cc.sizes[id];
            }
        }
    }
    return cc;
}

std::vector<Element> involution_set(const FiniteGroup& g) {
    std::vector<Element> s;
    for (Element x = 0; x < g.order(); ++x)
        if (g.mul(x, x) == 0) s.push_back(x);
    return s;
}

std::vector<Element> centralizer(const FiniteGroup& g, Element x) {
    std::vector<Element> c;
    for (Element y = 0; y < g.order(); ++y)
        if (g.commute(x, y)) c.push_back(y);
    return c;
}

}  // namespace dw
