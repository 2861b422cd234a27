#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>

#include "affinv/geometry.hpp"
#include "affinv/random.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace affinv;
using test_helpers::map2;
using test_helpers::vec2;

TEST_CASE("canonicalize drops interior points") {
    const ConvexBody tri = canonicalize({vec2(0, 0), vec2(1, 0), vec2(0, 1), vec2(0.2, 0.2)}, 2);
    CHECK(tri.vertex_count() == 3);
}

TEST_CASE("canonicalize rejects collinear input") {
    CHECK_THROWS_AS(canonicalize({vec2(0, 0), vec2(1, 0), vec2(2, 0)}, 2), DegenerateBody);
    CHECK_THROWS_AS(canonicalize({vec2(0, 0), vec2(1, 0)}, 2), TooFewPoints);
}

TEST_CASE("canonical order is CCW from the lexicographically smallest vertex") {
    const ConvexBody sq = canonicalize({vec2(1, 1), vec2(0, 0), vec2(1, 0), vec2(0, 1)}, 2);
    REQUIRE(sq.vertex_count() == 4);
    CHECK(sq.vertices()[0] == vec2(0, 0));
    CHECK(sq.vertices()[1] == vec2(1, 0));
    CHECK(sq.vertices()[2] == vec2(1, 1));
    CHECK(sq.vertices()[3] == vec2(0, 1));
}

TEST_CASE("canonicalize is idempotent and permutation-insensitive") {
    std::vector<Vec> pts{vec2(0.3, -0.2), vec2(1.7, 0.4), vec2(1.1, 1.9),
                         vec2(-0.6, 1.2), vec2(0.4, 0.5)};
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    });
    const ConvexBody reference = canonicalize(pts, 2);
    int checked = 0;
    do {
        CHECK(canonicalize(pts, 2) == reference);
        ++checked;
    } while (std::next_permutation(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
    }));
    CHECK(checked == 120);
    CHECK(canonicalize(reference.vertices(), 2) == reference);
}

TEST_CASE("apply_affine basics") {
    const ConvexBody square = make_body({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(apply_affine(AffineMap::identity(2), square) == square);

    const ConvexBody tri = make_body({{0, 0}, {1, 0}, {0, 1}});
    const ConvexBody sheared = apply_affine(map2(1, 1, 0, 1, 0, 0), tri);
    CHECK(sheared == make_body({{0, 0}, {1, 0}, {1, 1}}));
}

TEST_CASE("affine action is associative over composition") {
    Rng rng(7);
    const ConvexBody square = make_body({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    for (int i = 0; i < 25; ++i) {
        const AffineMap g = random_affine(rng, 2, 8.0);
        const AffineMap h = random_affine(rng, 2, 8.0);
        const ConvexBody lhs = apply_affine(h, apply_affine(g, square));
        const ConvexBody rhs = apply_affine(compose(h, g), square);
        REQUIRE(lhs.vertex_count() == rhs.vertex_count());
        for (size_t k = 0; k < lhs.vertex_count(); ++k)
            CHECK((lhs.vertices()[k] - rhs.vertices()[k]).norm() <=
                  1e-9 * std::max(1.0, lhs.diameter()));
    }
}

TEST_CASE("compose and invert closed forms") {
    const AffineMap g = map2(2, 0, 0, 1, 1, 0);
    const AffineMap id = AffineMap::identity(2);
    CHECK(map_distance(compose(g, id), g, 1.0) == 0.0);

    const AffineMap t = AffineMap::translation_by(vec2(3, -2));
    const AffineMap tinv = invert(t);
    CHECK((tinv.translation() - vec2(-3, 2)).norm() == 0.0);

    const AffineMap ginv = invert(g);
    CHECK(ginv.linear()(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(ginv.translation()[0] == doctest::Approx(-0.5).epsilon(1e-14));

    Mat singular(2, 2);
    singular << 1, 2, 2, 4;
    CHECK_THROWS_AS(AffineMap(singular, vec2(0, 0)), SingularMap);
}

TEST_CASE("compose(g, invert(g)) is the identity within 1e-10") {
    Rng rng(11);
    for (int i = 0; i < 50; ++i) {
        const AffineMap g = random_affine(rng, 2, 20.0);
        const AffineMap should_be_id = compose(g, invert(g));
        CHECK((should_be_id.linear() - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK(should_be_id.translation().cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("hausdorff_distance on known pairs") {
    const ConvexBody k = make_body({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(hausdorff_distance(k, k) == 0.0);

    const ConvexBody big = make_body({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
    CHECK(hausdorff_distance(k, big) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    const ConvexBody shifted = apply_affine(AffineMap::translation_by(vec2(0.3, -0.4)), k);
    CHECK(hausdorff_distance(k, shifted) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("hausdorff_distance satisfies metric axioms on random pairs") {
    Rng rng(23);
    for (int i = 0; i < 40; ++i) {
        const ConvexBody a = random_body(rng, 0.0, 5.0, nullptr);
        const ConvexBody b = random_body(rng, 0.0, 5.0, nullptr);
        const ConvexBody c = random_body(rng, 0.0, 5.0, nullptr);
        const double ab = hausdorff_distance(a, b);
        const double ba = hausdorff_distance(b, a);
        const double ac = hausdorff_distance(a, c);
        const double cb = hausdorff_distance(c, b);
        CHECK(std::abs(ab - ba) <= 1e-9);
        CHECK(ab <= ac + cb + 1e-9);
    }
}

TEST_CASE("hausdorff vertex reduction agrees with dense boundary sampling") {
    Rng rng(31);
    for (int i = 0; i < 15; ++i) {
        const ConvexBody a = random_body(rng, 0.0, 5.0, nullptr);
        const ConvexBody b = random_body(rng, 0.0, 5.0, nullptr);
        const double fast = hausdorff_distance(a, b);
        const double dense = oracles::dense_hausdorff(a, b, 1000);
        CHECK(std::abs(fast - dense) <= 1e-7);
    }
}

TEST_CASE("generic min-norm distance path matches the 2D edge path") {
    Rng rng(37);
    for (int i = 0; i < 25; ++i) {
        const ConvexBody b = random_body(rng, 0.0, 5.0, nullptr);
        const Vec x = vec2(rng.uniform(-2.0, 3.0), rng.uniform(-2.0, 3.0));
        const auto& v = b.vertices();
        double brute = std::numeric_limits<double>::infinity();
        bool inside = true;
        for (size_t k = 0; k < v.size(); ++k) {
            const Vec& p = v[k];
            const Vec& q = v[(k + 1) % v.size()];
            const double side = (q[0] - p[0]) * (x[1] - p[1]) - (q[1] - p[1]) * (x[0] - p[0]);
            if (side < 0.0) inside = false;
            const Vec pq = q - p;
            const double t = std::clamp((x - p).dot(pq) / pq.squaredNorm(), 0.0, 1.0);
            brute = std::min(brute, (x - (p + t * pq)).norm());
        }
        const double edge_path = inside ? 0.0 : brute;
        CHECK(distance_to_hull(x, v) == doctest::Approx(edge_path).epsilon(1e-8).scale(1.0));
    }
}

TEST_CASE("distance_to_hull in 3D") {
    std::vector<Vec> cube;
    for (int i = 0; i < 8; ++i) {
        Vec v(3);
        v << (i & 1), ((i >> 1) & 1), ((i >> 2) & 1);
        cube.push_back(v);
    }
    Vec outside(3);
    outside << 2.0, 0.5, 0.5;
    CHECK(distance_to_hull(outside, cube) == doctest::Approx(1.0).epsilon(1e-9));
    Vec inside(3);
    inside << 0.5, 0.5, 0.5;
    CHECK(distance_to_hull(inside, cube) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("canonicalize in 3D keeps extreme points only") {
    std::vector<Vec> pts;
    for (int i = 0; i < 8; ++i) {
        Vec v(3);
        v << (i & 1), ((i >> 1) & 1), ((i >> 2) & 1);
        pts.push_back(v);
    }
    Vec interior(3);
    interior << 0.5, 0.5, 0.5;
    pts.push_back(interior);
    const ConvexBody cube = canonicalize(pts, 3);
    CHECK(cube.vertex_count() == 8);

    std::vector<Vec> flat;
    for (int i = 0; i < 4; ++i) {
        Vec v(3);
        v << (i & 1), ((i >> 1) & 1), 0.0;
        flat.push_back(v);
    }
    CHECK_THROWS_AS(canonicalize(flat, 3), DegenerateBody);
}

TEST_CASE("volume on known bodies and covariance under affine maps") {
    const ConvexBody square = make_body({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(volume(square) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(volume(make_body({{0, 0}, {1, 0}, {0, 1}})) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(volume(apply_affine(map2(2, 0, 0, 3, 5, -1), square)) ==
          doctest::Approx(6.0).epsilon(1e-12));

    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        const ConvexBody k = random_body(rng, 0.0, 6.0, nullptr);
        const AffineMap g = random_affine(rng, 2, 6.0);
        const double lhs = volume(apply_affine(g, k));
        const double rhs = std::abs(g.det()) * volume(k);
        CHECK(std::abs(lhs - rhs) <= 1e-9 * rhs);
    }
}

TEST_CASE("intersect_convex on known pairs") {
    const ConvexBody k = make_body({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    const auto self = intersect_convex(k, k);
    REQUIRE(self.has_value());
    CHECK(*self == k);

    const ConvexBody far_square = make_body({{2, 2}, {3, 2}, {3, 3}, {2, 3}});
    CHECK(!intersect_convex(k, far_square).has_value());

    const ConvexBody offset = make_body({{0.5, 0}, {1.5, 0}, {1.5, 1}, {0.5, 1}});
    const auto overlap = intersect_convex(k, offset);
    REQUIRE(overlap.has_value());
    CHECK(volume(*overlap) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("symmetric_difference_volume") {
    const ConvexBody k = make_body({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(symmetric_difference_volume(k, k) == 0.0);
    const ConvexBody offset = make_body({{0.5, 0}, {1.5, 0}, {1.5, 1}, {0.5, 1}});
    CHECK(symmetric_difference_volume(k, offset) == doctest::Approx(1.0).epsilon(1e-12));
    const ConvexBody tri = make_body({{0, 0}, {1, 0}, {0, 1}});
    CHECK(symmetric_difference_volume(k, tri) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("contains_point margins") {
    const ConvexBody k = make_body({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(contains_point(k, vec2(0.5, 0.5), 0.4));
    CHECK(!contains_point(k, vec2(0.5, 0.5), 0.6));
    CHECK(!contains_point(k, vec2(2, 2), 0.0));
    CHECK_THROWS_AS(contains_point(k, vec2(0.5, 0.5), -0.1), InvalidArgument);
}

TEST_CASE("dimension mismatches are rejected") {
    const ConvexBody k = make_body({{0, 0}, {1, 0}, {0, 1}});
    Vec x3(3);
    x3 << 0, 0, 0;
    CHECK_THROWS_AS(contains_point(k, x3, 0.0), DimMismatch);
    std::vector<Vec> cube;
    for (int i = 0; i < 8; ++i) {
        Vec v(3);
        v << (i & 1), ((i >> 1) & 1), ((i >> 2) & 1);
        cube.push_back(v);
    }
    const ConvexBody c3 = canonicalize(cube, 3);
    CHECK_THROWS_AS(hausdorff_distance(k, c3), DimMismatch);
    CHECK_THROWS_AS(volume(c3), UnsupportedDimension);
    CHECK_THROWS_AS(symmetric_difference_volume(c3, c3), UnsupportedDimension);
}
