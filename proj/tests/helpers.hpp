#pragma once

#include "affinv/corpus.hpp"
#include "affinv/geometry.hpp"

namespace test_helpers {

inline affinv::Vec vec2(double x, double y) {
    affinv::Vec v(2);
    v << x, y;
    return v;
}

inline affinv::AffineMap map2(double a, double b, double c, double d, double tx, double ty) {
    affinv::Mat linear(2, 2);
    linear << a, b, c, d;
    return affinv::AffineMap(linear, vec2(tx, ty));
}

}  // namespace test_helpers
