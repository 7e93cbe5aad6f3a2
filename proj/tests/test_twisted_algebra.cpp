#include "doctest.h"

#include <algorithm>
#include <random>

#include "dw/twisted_algebra.hpp"
#include "oracles.hpp"

using namespace dw;

namespace {

AlgebraElement random_element(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> d;
    AlgebraElement a(n);
    for (auto& x : a) x = {d(rng), d(rng)};
    return a;
}

TwistedGroupAlgebra algebra(const char* group, const char* cocycle = "trivial") {
    return TwistedGroupAlgebra(parse_cocycle(cocycle, make_group(group)));
}

std::vector<int> dims(const WedderburnDecomposition& d) {
    std::vector<int> out;
    for (const auto& b : d.blocks) out.push_back(b.dim);
    return out;
}

}  // namespace

TEST_CASE("twisted multiplication") {
    const auto a = algebra("product(cyclic:2,cyclic:2)", "heisenberg:2");
    const auto xy = a.multiply(a.basis(1), a.basis(2));
    const auto yx = a.multiply(a.basis(2), a.basis(1));
    CHECK(xy[3] == Scalar(1));
    CHECK(yx[3] == Scalar(-1));

    std::mt19937_64 rng(1);
    const auto q = algebra("quaternion:8");
    const auto r = random_element(8, rng);
    CHECK(distance(q.multiply(q.unit(), r), r) < 1e-14);

    // trivial cocycle: group algebra convolution
    const auto s3 = algebra("symmetric:3");
    const auto u = random_element(6, rng), v = random_element(6, rng);
    AlgebraElement conv(6, 0.0);
    for (Element g = 0; g < 6; ++g)
        for (Element h = 0; h < 6; ++h) conv[s3.group().mul(g, h)] += u[g] * v[h];
    CHECK(distance(s3.multiply(u, v), conv) < 1e-12);
    CHECK_THROWS(s3.multiply(u, AlgebraElement(5)));
}

TEST_CASE("trace form") {
    std::mt19937_64 rng(2);
    for (const auto& a : {algebra("symmetric:3"), algebra("product(cyclic:3,cyclic:3)", "heisenberg:3"),
                          algebra("dihedral:8", "sign:5")}) {
        const int n = a.dimension();
        CHECK(a.trace(a.unit()) == Scalar(n));
        for (Element g = 1; g < n; ++g) CHECK(a.trace(a.basis(g)) == Scalar(0));
        for (int k = 0; k < 5; ++k) {
            const auto x = random_element(n, rng), y = random_element(n, rng);
            CHECK(std::abs(a.trace(subtract(a.multiply(x, y), a.multiply(y, x)))) < 1e-10);
            CHECK(std::abs(a.trace(x) - a.literal_trace(x)) < 1e-10);
        }
        for (Element g = 0; g < n; ++g)
            for (Element h = 0; h < n; ++h) {
                const Scalar t = a.trace(a.multiply_basis(g, a.basis(h)));
                CHECK(std::abs(t) == doctest::Approx(h == a.group().inv(g) ? n : 0.0));
            }
    }
}

TEST_CASE("pairing vector reproduces the trace form") {
    std::mt19937_64 rng(3);
    for (const auto& a : {algebra("quaternion:8"), algebra("product(cyclic:3,cyclic:3)", "heisenberg:3"),
                          algebra("cyclic:4", "sign:1")}) {
        const int n = a.dimension();
        const auto v = a.pairing_vector();
        CHECK(static_cast<int>(v.size()) == n);
        AlgebraElement sum = a.zero();
        for (const auto& t : v) sum = add(sum, scale(a.multiply(a.basis(t.left), a.basis(t.right)), t.coefficient));
        CHECK(distance(sum, a.unit()) < 1e-12);
        for (int k = 0; k < 50; ++k) {
            const auto x = random_element(n, rng), y = random_element(n, rng);
            Scalar rhs = 0;
            for (const auto& t : v)
                rhs += t.coefficient * a.trace(a.multiply(x, a.basis(t.left))) * a.trace(a.multiply(y, a.basis(t.right)));
            CHECK(std::abs(a.trace(a.multiply(x, y)) - rhs) < 1e-9 * (1 + std::abs(rhs)));
        }
    }
}

TEST_CASE("center dimension equals the regular class count") {
    CHECK(center_basis(algebra("cyclic:5")).size() == 5);
    CHECK(center_basis(algebra("product(cyclic:2,cyclic:2)", "heisenberg:2")).size() == 1);
    CHECK(center_basis(algebra("symmetric:3")).size() == 3);
    for (const char* g : {"dihedral:8", "quaternion:8"})
        for (const auto& c : sign_cocycles_catalog(make_group(g)).cocycles)
            CHECK(static_cast<int>(center_basis(TwistedGroupAlgebra(c)).size()) == c_regular_count(c));
}

TEST_CASE("block decomposition") {
    CHECK(dims(wedderburn_decompose(algebra("cyclic:2"))) == std::vector<int>{1, 1});
    CHECK(dims(wedderburn_decompose(algebra("product(cyclic:2,cyclic:2)", "heisenberg:2"))) == std::vector<int>{2});
    CHECK(dims(wedderburn_decompose(algebra("symmetric:3"))) == std::vector<int>{1, 1, 2});
    CHECK(dims(wedderburn_decompose(algebra("product(cyclic:3,cyclic:3)", "heisenberg:3"))) == std::vector<int>{3});
    CHECK(dims(wedderburn_decompose(algebra("symmetric:4"))) == std::vector<int>{1, 1, 2, 3, 3});

    for (const char* g : {"quaternion:8", "dihedral:8", "dihedral:12", "symmetric:4"}) {
        const auto a = algebra(g);
        const auto dec = wedderburn_decompose(a);
        CHECK(dec.sum_dim_squares() == a.dimension());
        CHECK(dec.diagnostics.idempotent_error < 1e-8);
        CHECK(dec.diagnostics.orthogonality_error < 1e-8);
        CHECK(dec.diagnostics.unit_error < 1e-8);
        for (const auto& b : dec.blocks) CHECK(a.dimension() % b.dim == 0);
    }
}

TEST_CASE("decomposition does not depend on the seed") {
    const auto a = algebra("symmetric:4");
    const auto d0 = wedderburn_decompose(a, 0), d1 = wedderburn_decompose(a, 12345);
    REQUIRE(d0.block_count() == d1.block_count());
    for (int k = 0; k < d0.block_count(); ++k) CHECK(distance(d0.blocks[k].idempotent, d1.blocks[k].idempotent) < 1e-8);
}

TEST_CASE("characters") {
    const auto z2 = algebra("cyclic:2");
    const auto dz = wedderburn_decompose(z2);
    std::vector<std::vector<double>> rows;
    for (const auto& b : dz.blocks) rows.push_back({b.character[0].real(), b.character[1].real()});
    std::sort(rows.begin(), rows.end());
    CHECK(rows[0][1] == doctest::Approx(-1));
    CHECK(rows[1][1] == doctest::Approx(1));

    const auto s3 = algebra("symmetric:3");
    const auto ds = wedderburn_decompose(s3);
    const auto& two = ds.blocks.back();
    CHECK(two.dim == 2);
    for (Element t : involution_set(s3.group()))
        if (t != 0) CHECK(std::abs(two.character[t]) < 1e-10);

    // orthogonality of irreducible characters
    for (const char* g : {"quaternion:8", "dihedral:12", "symmetric:4"}) {
        const auto a = algebra(g);
        const auto dec = wedderburn_decompose(a);
        for (int i = 0; i < dec.block_count(); ++i) {
            CHECK(std::abs(dec.blocks[i].character[0] - double(dec.blocks[i].dim)) < 1e-10);
            for (int j = 0; j < dec.block_count(); ++j) {
                Scalar s = 0;
                for (Element x = 0; x < a.dimension(); ++x)
                    s += dec.blocks[i].character[x] * std::conj(dec.blocks[j].character[x]);
                CHECK(std::abs(s / double(a.dimension()) - (i == j ? 1.0 : 0.0)) < 1e-9);
                CHECK(std::abs(block_character(a, dec, i, 1) - dec.blocks[i].character[1]) < 1e-12);
            }
        }
    }
}

TEST_CASE("involution") {
    const auto s3 = algebra("symmetric:3");
    for (Element g = 0; g < 6; ++g) CHECK(distance(s3.star(s3.basis(g)), s3.basis(s3.group().inv(g))) < 1e-15);
    CHECK(distance(s3.star(s3.unit()), s3.unit()) < 1e-15);
    const auto h = algebra("product(cyclic:2,cyclic:2)", "heisenberg:2");
    CHECK(distance(h.star(h.basis(1)), h.basis(1)) < 1e-15);

    std::mt19937_64 rng(5);
    for (const auto& c : sign_cocycles_catalog(make_group("quaternion:8")).cocycles) {
        const TwistedGroupAlgebra a(c);
        for (int k = 0; k < 10; ++k) {
            const auto x = random_element(8, rng), y = random_element(8, rng);
            CHECK(distance(a.star(a.multiply(x, y)), a.multiply(a.star(y), a.star(x))) < 1e-12);
            CHECK(std::abs(a.trace(a.star(x)) - a.trace(x)) < 1e-12);
            CHECK(distance(a.star(a.star(x)), x) < 1e-12);
        }
        // star on either side of the pairing vector gives the same tensor
        std::vector<Scalar> first(64, 0.0), second(64, 0.0);
        for (const auto& t : a.pairing_vector()) {
            const auto l = a.star(a.basis(t.left)), r = a.star(a.basis(t.right));
            for (Element u = 0; u < 8; ++u) {
                first[u * 8 + t.right] += t.coefficient * l[u];
                second[t.left * 8 + u] += t.coefficient * r[u];
            }
        }
        CHECK(distance(first, second) < 1e-15);
    }
    CHECK_THROWS(algebra("product(cyclic:3,cyclic:3)", "heisenberg:3").star(AlgebraElement(9, 1.0)));
}

TEST_CASE("structural indicators agree with the character-sum indicator") {
    for (const char* g : {"cyclic:2", "cyclic:3", "quaternion:8", "dihedral:8", "symmetric:3", "symmetric:4", "dihedral:12",
                          "product(cyclic:4,cyclic:2)"}) {
        const auto a = algebra(g);
        const auto dec = with_fs_indicators(a, wedderburn_decompose(a));
        for (const auto& b : dec.blocks) CHECK(fs_value(b.fs) == std::lround(oracle::classical_fs(a.group(), b.character)));
    }
    const auto q8 = with_fs_indicators(algebra("quaternion:8"), wedderburn_decompose(algebra("quaternion:8")));
    CHECK(q8.blocks.back().fs == FsIndicator::quaternionic);
    const auto h = algebra("product(cyclic:2,cyclic:2)", "heisenberg:2");
    CHECK(with_fs_indicators(h, wedderburn_decompose(h)).blocks[0].fs == FsIndicator::real);
    const auto z2 = algebra("cyclic:2", "sign:1");
    for (const auto& b : with_fs_indicators(z2, wedderburn_decompose(z2)).blocks) CHECK(b.fs == FsIndicator::complex);
}

TEST_CASE("indicators are stable under sign twists") {
    std::mt19937_64 rng(11);
    for (const auto& c : sign_cocycles_catalog(make_group("dihedral:8")).cocycles) {
        const TwistedGroupAlgebra a(c);
        const auto d = with_fs_indicators(a, wedderburn_decompose(a));
        std::vector<RootOfUnity> b(8, RootOfUnity::one());
        for (int x = 1; x < 8; ++x) b[x] = rng() % 2 ? RootOfUnity::minus_one() : RootOfUnity::one();
        const TwistedGroupAlgebra ta(twist(c, b));
        const auto e = with_fs_indicators(ta, wedderburn_decompose(ta));
        auto profile = [](const WedderburnDecomposition& w) {
            std::vector<std::pair<int, int>> p;
            for (const auto& blk : w.blocks) p.push_back({blk.dim, fs_value(blk.fs)});
            std::sort(p.begin(), p.end());
            return p;
        };
        CHECK(profile(d) == profile(e));
    }
}
