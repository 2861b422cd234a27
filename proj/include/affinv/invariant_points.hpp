#pragma once

#include <string>

#include "affinv/geometry.hpp"
#include "affinv/symmetry.hpp"

namespace affinv {

/// Built-in affine-equivariant base points. The area centroid is used rather
/// than the vertex average: the vertex average jumps when the vertex count
/// changes, so it is not continuous on the space of bodies.
enum class BaseInvariantPointId { centroid, loewner_center };

std::string to_string(BaseInvariantPointId id);
BaseInvariantPointId base_point_from_string(const std::string& name);  // throws UnknownId

/// Area centroid via triangle-fan decomposition from the first canonical
/// vertex (n = 2 only).
Point centroid(const ConvexBody& K);

/// Center of the minimum-volume enclosing ellipsoid.
Point loewner_center(const ConvexBody& K, double eps_mvee = 1e-7);

Point evaluate_base(BaseInvariantPointId id, const ConvexBody& K);

struct InclusionReport {
    double distance = 0.0;
    bool pass = false;
};

/// Distance from the base point's value to its projection onto the fixed-point
/// set of K's stabilizer; passes when within tol_fix * diam(K).
InclusionReport check_inclusion(BaseInvariantPointId id, const ConvexBody& K,
                                double tol_fix = 1e-6);

}  // namespace affinv
