#include <doctest.h>

#include <cmath>
#include <numbers>

#include "affinv/invariant_points.hpp"
#include "affinv/random.hpp"
#include "affinv/symmetry.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace affinv;
using test_helpers::vec2;

TEST_CASE("stabilizer orders match the permutation oracle on key bodies") {
    struct Expect {
        ConvexBody body;
        size_t order;
    };
    const Expect cases[] = {
        {make_body({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}), 8},
        {make_body({{0, 0}, {1, 0}, {0, 1}}), 6},
        {make_body({{0, 0}, {3, 0}, {2.5, 1}, {0, 2}}), 1},
    };
    for (const auto& c : cases) {
        const SymmetryGroup group = affine_symmetry_group(c.body);
        CHECK(group.order() == c.order);
        const auto oracle = oracles::brute_force_symmetries(c.body, 1e-6);
        CHECK(oracle.size() == c.order);
        CHECK(oracles::same_map_set(group.elements, oracle, 1e-6, c.body.diameter()));
    }
}

TEST_CASE("stabilizer is closed under composition and inversion") {
    for (const auto& fixture : standard_corpus()) {
        const SymmetryGroup group = affine_symmetry_group(fixture.body);
        const double tol = group.tol * group.scale;
        for (const auto& g : group.elements) {
            bool has_inverse = false;
            const AffineMap ginv = invert(g);
            for (const auto& h : group.elements)
                if (map_distance(ginv, h, group.scale) <= tol) has_inverse = true;
            CHECK(has_inverse);
            for (const auto& h : group.elements) {
                const AffineMap gh = compose(g, h);
                bool has_product = false;
                for (const auto& k : group.elements)
                    if (map_distance(gh, k, group.scale) <= tol) has_product = true;
                CHECK(has_product);
            }
        }
    }
}

TEST_CASE("stabilizers transform by conjugation") {
    Rng rng(71);
    const ConvexBody square = make_body({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    const ConvexBody trap = make_body({{-1, 0}, {1, 0}, {0.5, 1}, {-0.5, 1}});
    for (const ConvexBody* body : {&square, &trap}) {
        for (int i = 0; i < 5; ++i) {
            const AffineMap g = random_affine(rng, 2, 8.0);
            const ConvexBody image = apply_affine(g, *body);
            const SymmetryGroup direct = affine_symmetry_group(image);
            std::vector<AffineMap> conjugated;
            for (const auto& h : affine_symmetry_group(*body).elements)
                conjugated.push_back(compose(g, compose(h, invert(g))));
            CHECK(oracles::same_map_set(direct.elements, conjugated, 1e-5, image.diameter()));
        }
    }
}

TEST_CASE("the Loewner center is fixed by every stabilizer") {
    for (const auto& fixture : standard_corpus()) {
        const SymmetryGroup group = affine_symmetry_group(fixture.body);
        CHECK(is_member(group, loewner_center(fixture.body)));
    }
}

TEST_CASE("fixed set of the trivial group is the whole plane") {
    SymmetryGroup trivial{2, {AffineMap::identity(2)}, 1.0, 1e-6};
    const AffineSubspace fix = fixed_point_set(trivial);
    CHECK(fix.subspace_dim() == 2);
    CHECK(fix.base.norm() == 0.0);
    const Vec x = vec2(3.7, -1.2);
    CHECK((project_onto(fix, x) - x).norm() <= 1e-12);
}

TEST_CASE("fixed set of the square stabilizer is its center") {
    const ConvexBody square = make_body({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    const AffineSubspace fix = fixed_point_set(affine_symmetry_group(square));
    CHECK(fix.subspace_dim() == 0);
    CHECK(fix.base.norm() <= 1e-9);
}

TEST_CASE("fixed set of the trapezoid stabilizer is the vertical axis") {
    const ConvexBody trap = make_body({{-1, 0}, {1, 0}, {0.5, 1}, {-0.5, 1}});
    const SymmetryGroup group = affine_symmetry_group(trap);
    REQUIRE(group.order() == 2);
    const AffineSubspace fix = fixed_point_set(group);
    REQUIRE(fix.subspace_dim() == 1);
    CHECK(std::abs(fix.base[0]) <= 1e-9);
    CHECK(std::abs(std::abs(fix.directions[0][1]) - 1.0) <= 1e-10);

    CHECK((project_onto(fix, vec2(2, 5)) - vec2(0, 5)).norm() <= 1e-9);
}

TEST_CASE("fixed sets are affinely covariant") {
    Rng rng(73);
    const ConvexBody trap = make_body({{-1, 0}, {1, 0}, {0.5, 1}, {-0.5, 1}});
    for (int i = 0; i < 5; ++i) {
        const AffineMap g = random_affine(rng, 2, 8.0);
        const ConvexBody image = apply_affine(g, trap);
        const AffineSubspace fix_image = fixed_point_set(affine_symmetry_group(image));
        const AffineSubspace fix_base = fixed_point_set(affine_symmetry_group(trap));
        REQUIRE(fix_image.subspace_dim() == fix_base.subspace_dim());
        // compare as point sets: g(base) must lie on the image subspace and
        // the pushed-forward direction must stay in its span
        const Vec pushed_base = g(fix_base.base);
        CHECK((pushed_base - project_onto(fix_image, pushed_base)).norm() <=
              1e-6 * image.diameter());
        const Vec pushed_dir = g(fix_base.base + fix_base.directions[0]);
        CHECK((pushed_dir - project_onto(fix_image, pushed_dir)).norm() <=
              1e-6 * image.diameter());
    }
}

TEST_CASE("project_onto closed forms") {
    const AffineSubspace point{vec2(0, 0), {}};
    CHECK((project_onto(point, vec2(3, 4)) - vec2(0, 0)).norm() == 0.0);
    const AffineSubspace axis{vec2(0, 0), {vec2(0, 1)}};
    CHECK((project_onto(axis, vec2(2, 5)) - vec2(0, 5)).norm() == 0.0);
}

TEST_CASE("is_member distinguishes fixed and moved points") {
    const ConvexBody square = make_body({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    const SymmetryGroup group = affine_symmetry_group(square);
    CHECK(is_member(group, vec2(0, 0)));
    CHECK(!is_member(group, vec2(1, 1)));  // a 90-degree element moves the corner

    SymmetryGroup trivial{2, {AffineMap::identity(2)}, 1.0, 1e-6};
    CHECK(is_member(trivial, vec2(123.0, -7.0)));
}

TEST_CASE("inconsistent groups are rejected by fixed_point_set") {
    SymmetryGroup bad{2, {AffineMap::translation_by(vec2(1, 0))}, 1.0, 1e-6};
    CHECK_THROWS_AS(fixed_point_set(bad), EmptyFixedSet);
}

TEST_CASE("near-coincident vertices trigger ToleranceAmbiguity") {
    // A triangle with every corner split into a pair of vertices 1e-7 apart:
    // the swap-within-pairs bijection and the identity produce maps closer
    // than tol_sym while both passing the Hausdorff gate.
    std::vector<Vec> pts;
    for (int k = 0; k < 3; ++k) {
        const double th = 2.0 * std::numbers::pi * k / 3.0;
        pts.push_back(vec2(std::cos(th), std::sin(th)));
        pts.push_back(vec2(std::cos(th + 1e-7), std::sin(th + 1e-7)));
    }
    const ConvexBody split = canonicalize(pts, 2);
    REQUIRE(split.vertex_count() == 6);
    CHECK_THROWS_AS(affine_symmetry_group(split), ToleranceAmbiguity);
}
