#pragma once

#include <string>
#include <vector>

#include "affinv/geometry.hpp"

namespace affinv {

/// Named fixture with its expected stabilizer order and fixed-set dimension.
struct Fixture {
    std::string name;
    ConvexBody body;
    int symmetry_order;
    int fixed_set_dim;
};

/// Standard 2D test corpus: square, rectangle, triangles, regular n-gons
/// (n = 3..8), isosceles trapezoid, and asymmetric quadrilateral/pentagon.
const std::vector<Fixture>& standard_corpus();

ConvexBody make_body(std::initializer_list<std::pair<double, double>> pts);

}  // namespace affinv
