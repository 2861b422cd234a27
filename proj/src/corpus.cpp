#include "affinv/corpus.hpp"

#include <cmath>
#include <numbers>

namespace affinv {

ConvexBody make_body(std::initializer_list<std::pair<double, double>> pts) {
    std::vector<Vec> points;
    points.reserve(pts.size());
    for (const auto& [x, y] : pts) {
        Vec p(2);
        p << x, y;
        points.push_back(std::move(p));
    }
    return canonicalize(points, 2);
}

namespace {

ConvexBody regular_ngon(int sides) {
    std::vector<Vec> points;
    points.reserve(sides);
    for (int k = 0; k < sides; ++k) {
        const double th = 2.0 * std::numbers::pi * k / sides;
        Vec p(2);
        p << std::cos(th), std::sin(th);
        points.push_back(std::move(p));
    }
    return canonicalize(points, 2);
}

std::vector<Fixture> build_corpus() {
    std::vector<Fixture> fixtures;
    fixtures.push_back({"square", make_body({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}), 8, 0});
    // Affinely the rectangle is a square, so its affine stabilizer has order 8.
    fixtures.push_back({"rectangle", make_body({{-2, -1}, {2, -1}, {2, 1}, {-2, 1}}), 8, 0});
    fixtures.push_back({"right-triangle", make_body({{0, 0}, {1, 0}, {0, 1}}), 6, 0});
    fixtures.push_back({"scalene-triangle", make_body({{-1, 0}, {2, 0}, {0.4, 1.3}}), 6, 0});
    for (int sides = 3; sides <= 8; ++sides)
        fixtures.push_back(
            {"regular-" + std::to_string(sides) + "-gon", regular_ngon(sides), 2 * sides, 0});
    fixtures.push_back(
        {"isosceles-trapezoid", make_body({{-1, 0}, {1, 0}, {0.5, 1}, {-0.5, 1}}), 2, 1});
    fixtures.push_back(
        {"asymmetric-quadrilateral", make_body({{0, 0}, {3, 0}, {2.5, 1}, {0, 2}}), 1, 2});
    fixtures.push_back(
        {"asymmetric-pentagon",
         make_body({{0, 0}, {2, 0}, {2.6, 1.2}, {1.1, 2.3}, {-0.4, 1.1}}), 1, 2});
    return fixtures;
}

}  // namespace

const std::vector<Fixture>& standard_corpus() {
    static const std::vector<Fixture> corpus = build_corpus();
    return corpus;
}

}  // namespace affinv
