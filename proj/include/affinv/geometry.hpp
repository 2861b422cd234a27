#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "affinv/errors.hpp"

namespace affinv {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using Point = Vec;
using Scalar = double;

/// Invertible affine transformation x |-> translation + linear * x.
class AffineMap {
public:
    AffineMap(Mat linear, Vec translation);

    static AffineMap identity(int dim);
    static AffineMap translation_by(const Vec& t);

    int dim() const { return static_cast<int>(linear_.rows()); }
    const Mat& linear() const { return linear_; }
    const Vec& translation() const { return translation_; }
    double det() const { return det_; }

    Vec operator()(const Vec& x) const { return translation_ + linear_ * x; }

private:
    Mat linear_;
    Vec translation_;
    double det_;
};

// (h o g)(x) = h(g(x))
AffineMap compose(const AffineMap& h, const AffineMap& g);
AffineMap invert(const AffineMap& g);

// Relative determinant floor below which a linear part counts as singular.
double singularity_floor(const Mat& linear);

// Largest entrywise deviation between two maps; translations are compared
// relative to `scale` so the metric is unit-free.
double map_distance(const AffineMap& a, const AffineMap& b, double scale);

/// Full-dimensional convex polytope held as its canonically ordered extreme
/// points. For n = 2 the order is counter-clockwise starting at the
/// lexicographically smallest vertex; identical point sets always produce
/// bit-identical vertex lists.
class ConvexBody {
public:
    int dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    size_t vertex_count() const { return vertices_.size(); }
    double diameter() const { return diameter_; }

    bool operator==(const ConvexBody& other) const;

    friend ConvexBody canonicalize(const std::vector<Point>& points, int dim);
    friend ConvexBody apply_affine(const AffineMap& g, const ConvexBody& K);

private:
    ConvexBody(int dim, std::vector<Vec> verts);

    int dim_ = 0;
    std::vector<Vec> vertices_;
    double diameter_ = 0.0;
};

ConvexBody canonicalize(const std::vector<Point>& points, int dim);
ConvexBody apply_affine(const AffineMap& g, const ConvexBody& K);

double hausdorff_distance(const ConvexBody& A, const ConvexBody& B);
double volume(const ConvexBody& K);
std::optional<ConvexBody> intersect_convex(const ConvexBody& A, const ConvexBody& B);
double symmetric_difference_volume(const ConvexBody& A, const ConvexBody& B);

// True iff x lies in K with distance >= margin to every facet.
bool contains_point(const ConvexBody& K, const Point& x, double margin);

// Signed distance from x to the nearest facet line; positive inside.
// Only defined for n <= 2.
double facet_clearance(const ConvexBody& K, const Point& x);

// Euclidean distance from x to the polytope spanned by `vertices`
// (0 when x is inside). Dimension-generic min-norm-point computation.
double distance_to_hull(const Point& x, const std::vector<Vec>& vertices);

namespace detail {

// Area of the intersection of the CCW polygon `poly` with body B (n = 2).
// Works on raw vertex loops so the alignment objective can evaluate
// near-degenerate candidates without constructing a ConvexBody.
double clip_area(const std::vector<Vec>& poly, const ConvexBody& B);

double polygon_area(const std::vector<Vec>& loop);

}  // namespace detail

}  // namespace affinv
