#pragma once

#include "affinv/geometry.hpp"

namespace affinv {

/// Ellipsoid { x : (x - center)^T shape (x - center) <= 1 } with a symmetric
/// positive-definite shape matrix.
struct Ellipsoid {
    Vec center;
    Mat shape;

    int dim() const { return static_cast<int>(center.size()); }
};

// Throws InvalidArgument unless shape is symmetric (1e-12) positive-definite.
void validate_ellipsoid(const Ellipsoid& E);

/// Minimum-volume enclosing (Loewner) ellipsoid of the vertex set, computed by
/// Khachiyan-style coordinate ascent on the vertex weights. On return every
/// vertex u of K satisfies (u - c)^T M (u - c) <= 1 + eps.
///
/// `initial_weights`, when non-empty, seeds the ascent (used to exercise
/// uniqueness of the optimum); it must have one nonnegative entry per vertex.
Ellipsoid loewner_ellipsoid(const ConvexBody& K, double eps = 1e-7,
                            const std::vector<double>& initial_weights = {});

/// Affine map T with T(E) = unit ball: T(x) = shape^{1/2} (x - center).
AffineMap normalizer(const Ellipsoid& E);

}  // namespace affinv
