#include "doctest.h"

#include <random>
#include <sstream>

#include "dw/cocycle.hpp"
#include "oracles.hpp"

using namespace dw;

TEST_CASE("root-of-unity arithmetic is exact") {
    const RootOfUnity a{1, 4}, b{3, 4};
    CHECK((a * b).is_one());
    CHECK(a.inverse() == b);
    CHECK(RootOfUnity{2, 4}.reduced() == RootOfUnity::minus_one());
    CHECK(root_of_unity(1, 4) == std::complex<double>(0, 1));
    CHECK(root_of_unity(2, 4) == std::complex<double>(-1, 0));
}

TEST_CASE("verification accepts cocycles and locates violations") {
    for (const char* name : {"symmetric:3", "quaternion:8", "cyclic:5"})
        CHECK(verify_cocycle(TwoCocycle::trivial(make_group(name))).ok());
    CHECK(verify_cocycle(heisenberg_cocycle(2)).ok());
    CHECK(verify_cocycle(heisenberg_cocycle(3)).ok());

    const auto g = make_group("cyclic:3");
    const auto bad = TwoCocycle::trivial(g).with_value(2, 0, RootOfUnity::minus_one());
    const auto v = verify_cocycle(bad);
    CHECK(v.kind == CocycleVerdict::Kind::normalization);
    CHECK(v.g1 == 2);

    const auto broken = TwoCocycle::trivial(g).with_value(1, 1, RootOfUnity::minus_one());
    CHECK(verify_cocycle(broken).kind == CocycleVerdict::Kind::cocycle_identity);
}

TEST_CASE("coboundaries") {
    const auto z2 = make_group("cyclic:2");
    const auto db = coboundary(z2, {RootOfUnity::one(), RootOfUnity::minus_one()});
    for (Element a = 0; a < 2; ++a)
        for (Element b = 0; b < 2; ++b) CHECK(db.value(a, b).is_one());
    CHECK_THROWS_AS(coboundary(z2, {RootOfUnity::minus_one(), RootOfUnity::one()}), CocycleError);

    const auto s3 = make_group("symmetric:3");
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<RootOfUnity> b(6, RootOfUnity::one());
        for (int x = 1; x < 6; ++x) b[x] = {static_cast<std::int64_t>(rng() % 6), 6};
        CHECK(verify_cocycle(coboundary(s3, b)).ok());
    }
}

TEST_CASE("twisting lifts to a common order and keeps the identity") {
    const auto c = heisenberg_cocycle(3);
    std::vector<RootOfUnity> b(9, RootOfUnity::one());
    b[4] = {1, 4};
    const auto t = twist(c, b);
    CHECK(t.order() == 12);
    CHECK(verify_cocycle(t).ok());
}

TEST_CASE("heisenberg cocycle values and anticommutation") {
    const auto c = heisenberg_cocycle(2);
    // x = (1,0) index 1, y = (0,1) index 2
    CHECK(c.value(1, 2).is_one());
    CHECK(c.value(2, 1) == RootOfUnity::minus_one());
    CHECK(c.group().name() == "product(cyclic:2,cyclic:2)");
}

TEST_CASE("sign catalog") {
    const auto klein = sign_cocycles_catalog(make_group("product(cyclic:2,cyclic:2)"));
    CHECK(klein.cocycles.size() == 8);
    bool has_heisenberg = false;
    const auto h = heisenberg_cocycle(2);
    for (const auto& c : klein.cocycles) {
        CHECK(c.is_sign_valued());
        CHECK(verify_cocycle(c).ok());
        has_heisenberg = has_heisenberg || c.exponents() == h.exponents();
    }
    CHECK(has_heisenberg);

    // every normalized sign cocycle on Z/2 is determined by c(x,x)
    const auto z2 = sign_cocycles_catalog(make_group("cyclic:2"));
    REQUIRE(z2.cocycles.size() == 2);
    CHECK(z2.cocycles[1].value(1, 1) == RootOfUnity::minus_one());

    for (const char* g : {"cyclic:4", "dihedral:8", "quaternion:8"})
        for (const auto& c : sign_cocycles_catalog(make_group(g)).cocycles) CHECK(verify_cocycle(c).ok());

    const auto none = sign_cocycles_catalog(make_group("symmetric:3"));
    CHECK(none.cocycles.empty());
    CHECK_FALSE(none.warning.empty());
}

TEST_CASE("regular class counts") {
    for (const char* g : {"symmetric:3", "quaternion:8", "dihedral:8", "cyclic:6"}) {
        const auto gp = make_group(g);
        CHECK(c_regular_count(TwoCocycle::trivial(gp)) == oracle::class_count(*gp));
    }
    CHECK(c_regular_count(heisenberg_cocycle(2)) == 1);
    CHECK(c_regular_count(heisenberg_cocycle(3)) == 1);
    for (const auto& c : sign_cocycles_catalog(make_group("dihedral:8")).cocycles) CHECK(c_regularity(c).class_invariant);
}

TEST_CASE("inverse-pair identity holds for sign cocycles") {
    for (const char* g : {"product(cyclic:2,cyclic:2)", "quaternion:8", "cyclic:4"})
        for (const auto& c : sign_cocycles_catalog(make_group(g)).cocycles) CHECK(five_term_identity_holds(c));
}

TEST_CASE("cocycle files round-trip") {
    const auto c = heisenberg_cocycle(3);
    std::stringstream s;
    write_cocycle(s, c);
    const auto back = read_cocycle(s, c.group_ptr(), "copy");
    CHECK(back.exponents() == c.exponents());
    std::stringstream bad("order 2\n0 0 0\n");
    CHECK_THROWS_AS(read_cocycle(bad, c.group_ptr(), "x"), CocycleError);
    CHECK_THROWS_AS(parse_cocycle("heisenberg:2", make_group("cyclic:4")), CocycleError);
    CHECK_THROWS_AS(parse_cocycle("sign:9", make_group("cyclic:2")), CocycleError);
    CHECK_THROWS_AS(parse_cocycle("mystery", make_group("cyclic:2")), CocycleError);
}
