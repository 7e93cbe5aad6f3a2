#include "doctest.h"

#include <algorithm>

#include "dw/group.hpp"
#include "oracles.hpp"

using namespace dw;

TEST_CASE("builders produce the expected small groups") {
    CHECK(cyclic_group(1).order() == 1);
    const auto klein = direct_product(cyclic_group(2), cyclic_group(2));
    CHECK(klein.order() == 4);
    for (Element x = 0; x < 4; ++x) CHECK(klein.inv(x) == x);

    const auto q8 = quaternion_group();
    int order_two = 0;
    for (Element x = 0; x < 8; ++x) order_two += q8.element_order(x) == 2;
    CHECK(order_two == 1);

    const auto d8 = dihedral_group(8);
    CHECK(d8.order() == 8);
    CHECK_FALSE(d8.commute(1, 4));
    CHECK(symmetric_group(4).order() == 24);
}

TEST_CASE("descriptors parse, including nested products") {
    CHECK(parse_group("cyclic:6").order() == 6);
    CHECK(parse_group("product(cyclic:2,product(cyclic:3,cyclic:2))").order() == 12);
    CHECK(parse_group("product(cyclic:3,cyclic:3)").name() == "product(cyclic:3,cyclic:3)");
    CHECK_THROWS_AS(parse_group("cyclic:0"), GroupError);
    CHECK_THROWS_AS(parse_group("cyclic:-2"), GroupError);
    CHECK_THROWS_AS(parse_group("symmetric:6"), GroupError);
    CHECK_THROWS_AS(parse_group("lattice:3"), GroupError);
    CHECK_THROWS_AS(parse_group("product(cyclic:2"), GroupError);
}

TEST_CASE("order cap excludes the symmetric group on five letters") {
    CHECK_THROWS_AS(parse_group("symmetric:5"), GroupError);
}

TEST_CASE("tables violating the axioms are rejected") {
    // Z/3 with one product altered
    std::vector<Element> t{0, 1, 2, 1, 2, 0, 2, 0, 0};
    CHECK_THROWS_AS(FiniteGroup::from_table("bad", 3, t), GroupError);
    // a loop that is not associative
    std::vector<Element> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
    CHECK_THROWS_AS(FiniteGroup::from_table("loop", 5, loop), GroupError);
    CHECK_THROWS_AS(FiniteGroup::from_table("short", 2, {0, 1, 1}), GroupError);
}

TEST_CASE("conjugacy classes match brute-force conjugation") {
    const auto c4 = conjugacy_classes(cyclic_group(4));
    CHECK(c4.count() == 4);

    const auto s3 = symmetric_group(3);
    const auto cls = conjugacy_classes(s3);
    CHECK(cls.count() == 3);
    auto sizes = cls.sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 2, 3});

    for (const auto& g : {s3, quaternion_group(), dihedral_group(8), symmetric_group(4), dihedral_group(12)}) {
        const auto cc = conjugacy_classes(g);
        CHECK(cc.count() == oracle::class_count(g));
        for (Element x = 0; x < g.order(); ++x)
            for (Element y = 0; y < g.order(); ++y) CHECK(cc.class_of[g.conjugate(x, y)] == cc.class_of[x]);
        for (int k = 0; k < cc.count(); ++k)
            CHECK(static_cast<int>(centralizer(g, cc.representatives[k]).size()) * cc.sizes[k] == g.order());
    }
    CHECK(conjugacy_classes(quaternion_group()).count() == 5);
}

TEST_CASE("involution sets") {
    CHECK(involution_set(cyclic_group(3)) == std::vector<Element>{0});
    CHECK(involution_set(direct_product(cyclic_group(2), cyclic_group(2))).size() == 4);
    const auto q8 = quaternion_group();
    const auto s = involution_set(q8);
    REQUIRE(s.size() == 2);
    CHECK(s[0] == 0);
    CHECK(q8.element_order(s[1]) == 2);
    CHECK(involution_set(symmetric_group(3)).size() == 4);
}
