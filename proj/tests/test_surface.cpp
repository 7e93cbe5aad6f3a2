#include "doctest.h"

#include <random>
#include <tuple>

#include "dw/surface.hpp"

using namespace dw;

namespace {

bool every_edge_twice(const SimplicialSurface& s) {
    try {
        validate_simplicial(s);
        return true;
    } catch (const SurfaceError&) {
        return false;
    }
}

// Relabel-invariant fingerprint: counts of V, E, T and orientability.
std::tuple<int, int, int, bool> shape(const GluedTriangulation& t) {
    return {t.vertex_count(), t.edge_count(), t.triangle_count(), orientability_and_orientation(t).orientable};
}

}  // namespace

TEST_CASE("surface descriptors") {
    CHECK(parse_surface("orientable:3") == SurfaceSpec::oriented(3));
    CHECK(parse_surface("nonorientable:2").euler_characteristic() == 0);
    CHECK(SurfaceSpec::oriented(2).descriptor() == "orientable:2");
    CHECK_THROWS_AS(parse_surface("nonorientable:0"), SurfaceError);
    CHECK_THROWS_AS(parse_surface("klein"), SurfaceError);
    CHECK_THROWS_AS(parse_surface("orientable:x"), SurfaceError);
}

TEST_CASE("standard triangulations have the expected counts") {
    const auto sphere = standard_triangulation(SurfaceSpec::sphere());
    CHECK((shape(sphere) == std::tuple{3, 3, 2, true}));
    const auto torus = standard_triangulation(SurfaceSpec::oriented(1));
    CHECK((shape(torus) == std::tuple{1, 3, 2, true}));
    CHECK(standard_triangulation(SurfaceSpec::crosscaps(1)).euler_characteristic() == 1);
    CHECK(standard_triangulation(SurfaceSpec::crosscaps(1)).triangle_count() == 2);
    CHECK(standard_triangulation(SurfaceSpec::crosscaps(2)).triangle_count() == 2);
    for (int g = 0; g <= 4; ++g) {
        const auto t = standard_triangulation(SurfaceSpec::oriented(g));
        CHECK(classify(t) == SurfaceSpec::oriented(g));
        CHECK(t.consistently_oriented());
        if (g >= 1) CHECK(t.triangle_count() == 4 * g - 2);
    }
    for (int k = 1; k <= 5; ++k) CHECK(classify(standard_triangulation(SurfaceSpec::crosscaps(k))) == SurfaceSpec::crosscaps(k));
}

TEST_CASE("orientability") {
    CHECK(orientability_and_orientation(standard_triangulation(SurfaceSpec::oriented(1))).orientable);
    CHECK_FALSE(orientability_and_orientation(standard_triangulation(SurfaceSpec::crosscaps(2))).orientable);
    CHECK_FALSE(orientability_and_orientation(standard_triangulation(SurfaceSpec::crosscaps(1))).orientable);

    // scramble orientations, then recover a consistent one
    auto t = standard_triangulation(SurfaceSpec::oriented(2));
    t = flip_triangle(flip_triangle(t, 1), 4);
    CHECK_FALSE(t.consistently_oriented());
    const auto v = orientability_and_orientation(t);
    REQUIRE(v.orientable);
    CHECK(v.oriented->consistently_oriented());
    CHECK(classify(*v.oriented) == SurfaceSpec::oriented(2));
}

TEST_CASE("flipping a triangle twice restores it") {
    const auto t = standard_triangulation(SurfaceSpec::crosscaps(3));
    for (int k = 0; k < t.triangle_count(); ++k) {
        const auto back = flip_triangle(flip_triangle(t, k), k);
        CHECK(back.pairing() == t.pairing());
        CHECK(back.reversals() == t.reversals());
    }
}

TEST_CASE("malformed gluings are rejected") {
    CHECK_THROWS_AS(GluedTriangulation({1, 0, 2, 4, 3, 5}, std::vector<bool>(6, true)), SurfaceError);
    CHECK_THROWS_AS(GluedTriangulation({1, 2, 0}, std::vector<bool>(3, true)), SurfaceError);
    CHECK_THROWS_AS(GluedTriangulation({5, 4, 3, 2, 1, 0}, std::vector<bool>(5, true)), SurfaceError);
    std::vector<bool> mixed(6, true);
    mixed[0] = false;
    CHECK_THROWS_AS(GluedTriangulation({5, 4, 3, 2, 1, 0}, mixed), SurfaceError);
}

TEST_CASE("2-2 moves") {
    const auto torus = standard_triangulation(SurfaceSpec::oriented(1));
    for (int f = 0; f < torus.flag_count(); ++f) {
        const auto moved = pachner_22(torus, f);
        CHECK(moved.triangle_count() == 2);
        CHECK(moved.euler_characteristic() == 0);
        CHECK(classify(moved) == SurfaceSpec::oriented(1));
    }
    const auto sphere = to_glued(tetrahedron_sphere());
    for (int f = 0; f < sphere.flag_count(); ++f) {
        const auto moved = pachner_22(sphere, f);
        CHECK(classify(moved) == SurfaceSpec::sphere());
        // flipping the new diagonal (slot 2 of the first new triangle) returns to the original counts
        const auto back = pachner_22(moved, 3 * (f / 3) + 2);
        CHECK((shape(back) == shape(sphere)));
    }
    const auto klein = standard_triangulation(SurfaceSpec::crosscaps(2));
    for (int f = 0; f < klein.flag_count(); ++f)
        if (f / 3 != klein.partner(f) / 3) CHECK(classify(pachner_22(klein, f)) == SurfaceSpec::crosscaps(2));

    const auto p2 = standard_triangulation(SurfaceSpec::crosscaps(1));
    for (int f = 0; f < p2.flag_count(); ++f) CHECK(classify(pachner_22(p2, f)) == SurfaceSpec::crosscaps(1));
    for (int f = 0; f < klein.flag_count(); ++f)
        if (f / 3 == klein.partner(f) / 3) CHECK_THROWS_AS(pachner_22(klein, f), SurfaceError);
}

TEST_CASE("1-3 moves") {
    auto sphere = standard_triangulation(SurfaceSpec::sphere());
    const auto once = pachner_13(sphere, 0);
    CHECK(once.triangle_count() == 4);
    CHECK(once.euler_characteristic() == 2);
    for (int k = 0; k < 5; ++k) sphere = pachner_13(sphere, k % sphere.triangle_count());
    CHECK(sphere.triangle_count() == 12);
    CHECK(sphere.connected());
    CHECK(classify(sphere) == SurfaceSpec::sphere());
    CHECK(classify(pachner_13(standard_triangulation(SurfaceSpec::crosscaps(3)), 2)) == SurfaceSpec::crosscaps(3));
}

TEST_CASE("random move sequences preserve the surface") {
    std::mt19937_64 rng(99);
    for (const auto& s : {SurfaceSpec::oriented(2), SurfaceSpec::crosscaps(2), SurfaceSpec::crosscaps(1)}) {
        auto t = standard_triangulation(s);
        for (int m = 0; m < 12; ++m) {
            if (rng() % 2) {
                t = pachner_13(t, static_cast<int>(rng() % t.triangle_count()));
            } else {
                const int f = static_cast<int>(rng() % t.flag_count());
                if (f / 3 != t.partner(f) / 3) t = pachner_22(t, f);
            }
            CHECK(classify(t) == s);
        }
    }
}

TEST_CASE("simplicial surfaces") {
    const auto tet = tetrahedron_sphere();
    CHECK(tet.vertex_count == 4);
    CHECK(tet.edge_count() == 6);
    CHECK(tet.euler_characteristic() == 2);
    CHECK(every_edge_twice(tet));

    const auto torus = seven_vertex_torus();
    CHECK(torus.edge_count() == 21);
    CHECK(torus.triangles.size() == 14);
    CHECK(torus.euler_characteristic() == 0);
    CHECK(every_edge_twice(torus));
    CHECK(simplicial_orientable(torus));
    CHECK(to_glued(torus).consistently_oriented());
    CHECK(classify(to_glued(torus)) == SurfaceSpec::oriented(1));
    CHECK(to_glued(torus).vertex_count() == 7);

    const auto rp2 = six_vertex_projective_plane();
    CHECK(rp2.euler_characteristic() == 1);
    CHECK_FALSE(simplicial_orientable(rp2));
    CHECK(classify(to_glued(rp2)) == SurfaceSpec::crosscaps(1));
    CHECK_THROWS_AS(orient_coherently(rp2), SurfaceError);

    CHECK_FALSE(every_edge_twice(SimplicialSurface{4, {{0, 1, 2}, {0, 2, 3}}}));
    CHECK_FALSE(every_edge_twice(SimplicialSurface{3, {{0, 1, 1}}}));
}

TEST_CASE("relator presentations") {
    const auto t = relator_presentation(SurfaceSpec::oriented(1));
    CHECK(t.generator_count == 2);
    REQUIRE(t.relator.size() == 4);
    CHECK((t.relator[2].generator == 0 && t.relator[2].inverse));
    const auto k = relator_presentation(SurfaceSpec::crosscaps(2));
    REQUIRE(k.relator.size() == 4);
    CHECK((k.relator[0].generator == 0 && k.relator[1].generator == 0 && !k.relator[1].inverse));
    const auto g2 = relator_presentation(SurfaceSpec::oriented(2));
    CHECK(g2.relator.size() == 8);
    std::vector<int> uses(4, 0);
    for (const auto& l : g2.relator) ++uses[l.generator];
    CHECK(uses == std::vector<int>{2, 2, 2, 2});
    CHECK(relator_presentation(SurfaceSpec::sphere()).trivial_group);
    const auto r = rotated(g2, 3);
    CHECK(r.relator[0].generator == g2.relator[3].generator);
}
