#include <doctest.h>

#include <cmath>

#include "affinv/invariant_points.hpp"
#include "affinv/random.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace affinv;
using test_helpers::map2;
using test_helpers::vec2;

TEST_CASE("centroid closed forms") {
    const ConvexBody square = make_body({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK((centroid(square) - vec2(0.5, 0.5)).norm() <= 1e-14);

    const ConvexBody tri = make_body({{0, 0}, {1, 0}, {0, 1}});
    CHECK((centroid(tri) - vec2(1.0 / 3.0, 1.0 / 3.0)).norm() <= 1e-14);

    const ConvexBody image = apply_affine(map2(2, 0, 0, 1, 0, 3), square);
    CHECK((centroid(image) - vec2(1.0, 3.5)).norm() <= 1e-12);
}

TEST_CASE("loewner center of the centered square is the origin") {
    const ConvexBody square = make_body({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    CHECK(loewner_center(square).norm() <= 1e-9);
}

TEST_CASE("loewner center of a triangle matches the closed-form minimum ellipse") {
    // The minimum-volume enclosing ellipse of any triangle is centered at the
    // vertex mean; for the right triangle that is (1/3, 1/3).
    const ConvexBody tri = make_body({{0, 0}, {1, 0}, {0, 1}});
    const Ellipsoid oracle = oracles::steiner_circumellipse(tri);
    CHECK((loewner_center(tri) - oracle.center).norm() <= 1e-8);
    CHECK((loewner_center(tri) - vec2(1.0 / 3.0, 1.0 / 3.0)).norm() <= 1e-8);

    const Ellipsoid computed = loewner_ellipsoid(tri, 1e-7);
    CHECK((computed.shape - oracle.shape).cwiseAbs().maxCoeff() <= 1e-6);

    const ConvexBody scalene = make_body({{-1, 0}, {2, 0.3}, {0.4, 1.7}});
    const Ellipsoid oracle2 = oracles::steiner_circumellipse(scalene);
    CHECK((loewner_center(scalene) - oracle2.center).norm() <= 1e-8);
}

TEST_CASE("base points are equivariant on random bodies") {
    Rng rng(79);
    for (int i = 0; i < 20; ++i) {
        const ConvexBody k = random_body(rng, 0.0, 8.0, nullptr);
        const AffineMap g = random_affine(rng, 2, 8.0);
        const ConvexBody gk = apply_affine(g, k);
        CHECK((centroid(gk) - g(centroid(k))).norm() <= 1e-5 * gk.diameter());
        CHECK((loewner_center(gk) - g(loewner_center(k))).norm() <= 1e-5 * gk.diameter());
    }
}

TEST_CASE("base points are proper on the corpus") {
    for (const auto& fixture : standard_corpus()) {
        for (const auto id : {BaseInvariantPointId::centroid, BaseInvariantPointId::loewner_center})
            CHECK(facet_clearance(fixture.body, evaluate_base(id, fixture.body)) > 0.0);
    }
}

TEST_CASE("evaluate_base dispatch and id parsing") {
    const ConvexBody square = make_body({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK((evaluate_base(BaseInvariantPointId::centroid, square) - vec2(0.5, 0.5)).norm() <=
          1e-14);
    const ConvexBody centered = make_body({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    CHECK(evaluate_base(BaseInvariantPointId::loewner_center, centered).norm() <= 1e-9);

    CHECK(base_point_from_string("centroid") == BaseInvariantPointId::centroid);
    CHECK(base_point_from_string("loewner-center") == BaseInvariantPointId::loewner_center);
    CHECK_THROWS_AS(base_point_from_string("santalo"), UnknownId);
}

TEST_CASE("inclusion of built-in point values in the fixed set") {
    const ConvexBody square = make_body({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    const InclusionReport square_report = check_inclusion(BaseInvariantPointId::centroid, square);
    CHECK(square_report.pass);
    CHECK(square_report.distance <= 1e-9);

    const ConvexBody tri = make_body({{0, 0}, {1, 0}, {0, 1}});
    CHECK(check_inclusion(BaseInvariantPointId::loewner_center, tri).pass);

    const ConvexBody quad = make_body({{0, 0}, {3, 0}, {2.5, 1}, {0, 2}});
    const InclusionReport quad_report = check_inclusion(BaseInvariantPointId::centroid, quad);
    CHECK(quad_report.pass);
    CHECK(quad_report.distance == 0.0);  // trivial stabilizer fixes the whole plane
}

TEST_CASE("inclusion holds for both base points on the whole corpus") {
    for (const auto& fixture : standard_corpus())
        for (const auto id : {BaseInvariantPointId::centroid, BaseInvariantPointId::loewner_center})
            CHECK(check_inclusion(id, fixture.body).pass);
}

TEST_CASE("centroid requires n = 2") {
    std::vector<Vec> cube;
    for (int i = 0; i < 8; ++i) {
        Vec v(3);
        v << (i & 1), ((i >> 1) & 1), ((i >> 2) & 1);
        cube.push_back(v);
    }
    CHECK_THROWS_AS(centroid(canonicalize(cube, 3)), UnsupportedDimension);
}
