#include "affinv/invariant_points.hpp"

#include "affinv/ellipsoid.hpp"

namespace affinv {

std::string to_string(BaseInvariantPointId id) {
    switch (id) {
        case BaseInvariantPointId::centroid: return "centroid";
        case BaseInvariantPointId::loewner_center: return "loewner-center";
    }
    throw UnknownId("base point id out of range");
}

BaseInvariantPointId base_point_from_string(const std::string& name) {
    if (name == "centroid") return BaseInvariantPointId::centroid;
    if (name == "loewner-center" || name == "loewner_center")
        return BaseInvariantPointId::loewner_center;
    throw UnknownId("unknown base point id: " + name);
}

Point centroid(const ConvexBody& K) {
    if (K.dim() != 2) throw UnsupportedDimension("centroid: only n = 2 is supported");
    const auto& v = K.vertices();
    const Vec& apex = v[0];
    double area = 0.0;
    Vec weighted = Vec::Zero(2);
    for (size_t i = 1; i + 1 < v.size(); ++i) {
        const Vec a = v[i] - apex;
        const Vec b = v[i + 1] - apex;
        const double tri = 0.5 * (a[0] * b[1] - a[1] * b[0]);
        area += tri;
        weighted += tri * (apex + v[i] + v[i + 1]) / 3.0;
    }
    return weighted / area;
}

Point loewner_center(const ConvexBody& K, double eps_mvee) {
    return loewner_ellipsoid(K, eps_mvee).center;
}

Point evaluate_base(BaseInvariantPointId id, const ConvexBody& K) {
    switch (id) {
        case BaseInvariantPointId::centroid: return centroid(K);
        case BaseInvariantPointId::loewner_center: return loewner_center(K);
    }
    throw UnknownId("evaluate_base: id out of range");
}

InclusionReport check_inclusion(BaseInvariantPointId id, const ConvexBody& K, double tol_fix) {
    const Point p = evaluate_base(id, K);
    const AffineSubspace fix = fixed_point_set(affine_symmetry_group(K));
    InclusionReport report;
    report.distance = (p - project_onto(fix, p)).norm();
    report.pass = report.distance <= tol_fix * K.diameter();
    return report;
}

}  // namespace affinv
