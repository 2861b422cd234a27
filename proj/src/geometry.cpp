#include "affinv/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace affinv {

namespace {

bool lex_less(const Vec& a, const Vec& b) {
    for (int i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

void require_finite(const Vec& v, const char* where) {
    if (!v.allFinite()) throw InvalidArgument(std::string(where) + ": non-finite coordinate");
}

double point_set_diameter(const std::vector<Vec>& pts) {
    double d = 0.0;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) d = std::max(d, (pts[i] - pts[j]).norm());
    return d;
}

// cross of (a-o) and (b-o), n = 2
double cross3(const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<Vec> monotone_chain(std::vector<Vec> pts, double eps_cross) {
    // pts sorted lexicographically; returns strictly convex hull, CCW,
    // starting at the lexicographically smallest vertex.
    const size_t m = pts.size();
    if (m < 3) return pts;
    std::vector<Vec> h(2 * m);
    size_t k = 0;
    for (size_t i = 0; i < m; ++i) {
        while (k >= 2 && cross3(h[k - 2], h[k - 1], pts[i]) <= eps_cross) --k;
        h[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = m - 1; i-- > 0;) {
        while (k >= lower && cross3(h[k - 2], h[k - 1], pts[i]) <= eps_cross) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);  // last point equals the first
    return h;
}

double point_to_segment(const Vec& x, const Vec& a, const Vec& b) {
    const Vec ab = b - a;
    const double len2 = ab.squaredNorm();
    if (len2 <= 0.0) return (x - a).norm();
    const double t = std::clamp((x - a).dot(ab) / len2, 0.0, 1.0);
    return (x - (a + t * ab)).norm();
}

double point_to_body(const Vec& x, const ConvexBody& B) {
    const auto& v = B.vertices();
    if (B.dim() == 1) {
        const double lo = v.front()[0], hi = v.back()[0];
        if (x[0] < lo) return lo - x[0];
        if (x[0] > hi) return x[0] - hi;
        return 0.0;
    }
    if (B.dim() == 2) {
        const size_t m = v.size();
        bool inside = true;
        for (size_t i = 0; i < m; ++i) {
            if (cross3(v[i], v[(i + 1) % m], x) < 0.0) {
                inside = false;
                break;
            }
        }
        if (inside) return 0.0;
        double d = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < m; ++i) d = std::min(d, point_to_segment(x, v[i], v[(i + 1) % m]));
        return d;
    }
    return distance_to_hull(x, v);
}

}  // namespace

// ---------------------------------------------------------------------------
// AffineMap

AffineMap::AffineMap(Mat linear, Vec translation)
    : linear_(std::move(linear)), translation_(std::move(translation)) {
    if (linear_.rows() != linear_.cols())
        throw InvalidArgument("AffineMap: linear part must be square");
    if (translation_.size() != linear_.rows())
        throw DimMismatch("AffineMap: translation dimension mismatch");
    if (!linear_.allFinite() || !translation_.allFinite())
        throw InvalidArgument("AffineMap: non-finite entry");
    det_ = linear_.determinant();
    if (std::abs(det_) < singularity_floor(linear_)) {
        std::ostringstream os;
        os << "AffineMap: |det| = " << std::abs(det_) << " below conditioning floor";
        throw SingularMap(os.str());
    }
}

AffineMap AffineMap::identity(int dim) {
    return AffineMap(Mat::Identity(dim, dim), Vec::Zero(dim));
}

AffineMap AffineMap::translation_by(const Vec& t) {
    return AffineMap(Mat::Identity(t.size(), t.size()), t);
}

double singularity_floor(const Mat& linear) {
    const int n = static_cast<int>(linear.rows());
    return 1e-12 * std::pow(linear.norm(), n);
}

AffineMap compose(const AffineMap& h, const AffineMap& g) {
    if (h.dim() != g.dim()) throw DimMismatch("compose: dimension mismatch");
    return AffineMap(h.linear() * g.linear(), h.translation() + h.linear() * g.translation());
}

AffineMap invert(const AffineMap& g) {
    if (std::abs(g.det()) < singularity_floor(g.linear()))
        throw SingularMap("invert: map is near-singular");
    Mat inv = g.linear().inverse();
    return AffineMap(inv, -(inv * g.translation()));
}

double map_distance(const AffineMap& a, const AffineMap& b, double scale) {
    const double lin = (a.linear() - b.linear()).cwiseAbs().maxCoeff();
    const double tr = (a.translation() - b.translation()).cwiseAbs().maxCoeff();
    return std::max(lin, scale > 0.0 ? tr / scale : tr);
}

// ---------------------------------------------------------------------------
// ConvexBody

ConvexBody::ConvexBody(int dim, std::vector<Vec> verts) : dim_(dim), vertices_(std::move(verts)) {
    diameter_ = point_set_diameter(vertices_);
}

bool ConvexBody::operator==(const ConvexBody& other) const {
    if (dim_ != other.dim_ || vertices_.size() != other.vertices_.size()) return false;
    for (size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] != other.vertices_[i]) return false;
    return true;
}

ConvexBody canonicalize(const std::vector<Point>& points, int dim) {
    if (dim < 1) throw InvalidArgument("canonicalize: dim must be >= 1");
    if (points.size() < static_cast<size_t>(dim) + 1)
        throw TooFewPoints("canonicalize: need at least dim+1 points");
    for (const auto& p : points) {
        if (p.size() != dim) throw DimMismatch("canonicalize: point dimension mismatch");
        require_finite(p, "canonicalize");
    }

    const double diam = point_set_diameter(points);
    if (diam <= 0.0) throw DegenerateBody("canonicalize: all points coincide");
    const double fuse_tol = 1e-9 * diam;

    // Fuse near-duplicates. Sorting first makes the result independent of the
    // input permutation; the representative is the lexicographically smallest
    // member of each cluster, so no coordinates are ever averaged.
    std::vector<Vec> pts = points;
    std::sort(pts.begin(), pts.end(), lex_less);
    std::vector<Vec> reps;
    for (const auto& p : pts) {
        bool dup = false;
        for (const auto& r : reps)
            if ((p - r).norm() <= fuse_tol) {
                dup = true;
                break;
            }
        if (!dup) reps.push_back(p);
    }

    if (dim == 1) {
        if (reps.size() < 2) throw DegenerateBody("canonicalize: zero-length segment");
        return ConvexBody(1, {reps.front(), reps.back()});
    }

    if (dim == 2) {
        const double eps_cross = 1e-12 * diam * diam;
        std::vector<Vec> hull = monotone_chain(reps, eps_cross);
        if (hull.size() < 3) throw DegenerateBody("canonicalize: hull is not full-dimensional");
        return ConvexBody(2, std::move(hull));
    }

    // n >= 3: verify full dimensionality via the rank of the centered point
    // matrix, then keep points at positive distance from the hull of the rest.
    Mat centered(dim, reps.size());
    Vec mean = Vec::Zero(dim);
    for (const auto& p : reps) mean += p;
    mean /= static_cast<double>(reps.size());
    for (size_t i = 0; i < reps.size(); ++i) centered.col(i) = reps[i] - mean;
    Eigen::JacobiSVD<Mat> svd(centered);
    const auto& sv = svd.singularValues();
    if (sv.size() < dim || sv[dim - 1] <= 1e-9 * sv[0])
        throw DegenerateBody("canonicalize: hull is not full-dimensional");

    std::vector<Vec> extreme;
    for (size_t i = 0; i < reps.size(); ++i) {
        std::vector<Vec> others;
        others.reserve(reps.size() - 1);
        for (size_t j = 0; j < reps.size(); ++j)
            if (j != i) others.push_back(reps[j]);
        if (distance_to_hull(reps[i], others) > 1e-9 * diam) extreme.push_back(reps[i]);
    }
    if (extreme.size() < static_cast<size_t>(dim) + 1)
        throw DegenerateBody("canonicalize: too few extreme points");
    std::sort(extreme.begin(), extreme.end(), lex_less);
    return ConvexBody(dim, std::move(extreme));
}

ConvexBody apply_affine(const AffineMap& g, const ConvexBody& K) {
    if (g.dim() != K.dim()) throw DimMismatch("apply_affine: dimension mismatch");
    std::vector<Vec> verts;
    verts.reserve(K.vertex_count());
    for (const auto& v : K.vertices()) verts.push_back(g(v));

    // A nonsingular affine image of the extreme points is exactly the set of
    // extreme points of the image, so no re-hulling is needed; only the
    // canonical order has to be restored.
    if (K.dim() == 2) {
        if (g.det() < 0.0) std::reverse(verts.begin(), verts.end());
        size_t start = 0;
        for (size_t i = 1; i < verts.size(); ++i)
            if (lex_less(verts[i], verts[start])) start = i;
        std::rotate(verts.begin(), verts.begin() + static_cast<long>(start), verts.end());
    } else {
        std::sort(verts.begin(), verts.end(), lex_less);
    }
    return ConvexBody(K.dim(), std::move(verts));
}

// ---------------------------------------------------------------------------
// Metric and volume primitives

double hausdorff_distance(const ConvexBody& A, const ConvexBody& B) {
    if (A.dim() != B.dim()) throw DimMismatch("hausdorff_distance: dimension mismatch");
    // d(x, convex set) is convex, so each directed distance is attained at a
    // vertex of the source body.
    double d = 0.0;
    for (const auto& a : A.vertices()) d = std::max(d, point_to_body(a, B));
    for (const auto& b : B.vertices()) d = std::max(d, point_to_body(b, A));
    return d;
}

double volume(const ConvexBody& K) {
    if (K.dim() != 2) throw UnsupportedDimension("volume: only n = 2 is supported");
    return detail::polygon_area(K.vertices());
}

namespace detail {

double polygon_area(const std::vector<Vec>& loop) {
    const size_t m = loop.size();
    if (m < 3) return 0.0;
    double twice = 0.0;
    for (size_t i = 0; i < m; ++i) {
        const Vec& p = loop[i];
        const Vec& q = loop[(i + 1) % m];
        twice += p[0] * q[1] - q[0] * p[1];
    }
    return std::max(0.0, 0.5 * twice);
}

double clip_area(const std::vector<Vec>& poly, const ConvexBody& B) {
    std::vector<Vec> cur = poly;
    const auto& bv = B.vertices();
    const size_t mb = bv.size();
    std::vector<Vec> next;
    for (size_t e = 0; e < mb && !cur.empty(); ++e) {
        const Vec& p = bv[e];
        const Vec& q = bv[(e + 1) % mb];
        next.clear();
        const size_t m = cur.size();
        for (size_t i = 0; i < m; ++i) {
            const Vec& a = cur[i];
            const Vec& b = cur[(i + 1) % m];
            const double sa = cross3(p, q, a);
            const double sb = cross3(p, q, b);
            const bool ina = sa >= 0.0;
            const bool inb = sb >= 0.0;
            if (ina) next.push_back(a);
            if (ina != inb) {
                const double t = sa / (sa - sb);
                next.push_back(a + t * (b - a));
            }
        }
        cur = next;
    }
    return polygon_area(cur);
}

}  // namespace detail

std::optional<ConvexBody> intersect_convex(const ConvexBody& A, const ConvexBody& B) {
    if (A.dim() != B.dim()) throw DimMismatch("intersect_convex: dimension mismatch");
    if (A.dim() != 2) throw UnsupportedDimension("intersect_convex: only n = 2 is supported");

    std::vector<Vec> cur = A.vertices();
    const auto& bv = B.vertices();
    const size_t mb = bv.size();
    std::vector<Vec> next;
    for (size_t e = 0; e < mb && !cur.empty(); ++e) {
        const Vec& p = bv[e];
        const Vec& q = bv[(e + 1) % mb];
        next.clear();
        const size_t m = cur.size();
        for (size_t i = 0; i < m; ++i) {
            const Vec& a = cur[i];
            const Vec& b = cur[(i + 1) % m];
            const double sa = cross3(p, q, a);
            const double sb = cross3(p, q, b);
            if (sa >= 0.0) next.push_back(a);
            if ((sa >= 0.0) != (sb >= 0.0)) next.push_back(a + (sa / (sa - sb)) * (b - a));
        }
        cur = next;
    }

    const double scale = std::max(A.diameter(), B.diameter());
    if (cur.size() < 3 || detail::polygon_area(cur) <= 1e-12 * scale * scale) return std::nullopt;
    try {
        return canonicalize(cur, 2);
    } catch (const Error&) {
        return std::nullopt;
    }
}

double symmetric_difference_volume(const ConvexBody& A, const ConvexBody& B) {
    if (A.dim() != B.dim()) throw DimMismatch("symmetric_difference_volume: dimension mismatch");
    if (A.dim() != 2)
        throw UnsupportedDimension("symmetric_difference_volume: only n = 2 is supported");
    const double inter = detail::clip_area(A.vertices(), B);
    return std::max(0.0, volume(A) + volume(B) - 2.0 * inter);
}

double facet_clearance(const ConvexBody& K, const Point& x) {
    if (x.size() != K.dim()) throw DimMismatch("facet_clearance: dimension mismatch");
    const auto& v = K.vertices();
    if (K.dim() == 1) return std::min(x[0] - v.front()[0], v.back()[0] - x[0]);
    if (K.dim() != 2) throw UnsupportedDimension("facet_clearance: only n <= 2 is supported");
    double clearance = std::numeric_limits<double>::infinity();
    const size_t m = v.size();
    for (size_t i = 0; i < m; ++i) {
        const Vec& p = v[i];
        const Vec& q = v[(i + 1) % m];
        clearance = std::min(clearance, cross3(p, q, x) / (q - p).norm());
    }
    return clearance;
}

bool contains_point(const ConvexBody& K, const Point& x, double margin) {
    if (margin < 0.0) throw InvalidArgument("contains_point: margin must be >= 0");
    return facet_clearance(K, x) >= margin;
}

// ---------------------------------------------------------------------------
// Min-norm point (Wolfe) for dimension-generic point-to-hull distance

double distance_to_hull(const Point& x, const std::vector<Vec>& vertices) {
    if (vertices.empty()) throw InvalidArgument("distance_to_hull: empty vertex set");
    const size_t m = vertices.size();
    std::vector<Vec> p(m);
    double scale = 0.0;
    for (size_t i = 0; i < m; ++i) {
        p[i] = vertices[i] - x;
        scale = std::max(scale, p[i].norm());
    }
    if (scale == 0.0) return 0.0;
    const double tol = 1e-12 * scale * scale;

    size_t start = 0;
    for (size_t i = 1; i < m; ++i)
        if (p[i].squaredNorm() < p[start].squaredNorm()) start = i;

    std::vector<size_t> corral{start};
    std::vector<double> lambda{1.0};
    Vec w = p[start];

    for (int major = 0; major < 1000; ++major) {
        if (w.squaredNorm() <= tol) return 0.0;
        size_t j = 0;
        double best = std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < m; ++i) {
            const double dp = p[i].dot(w);
            if (dp < best) {
                best = dp;
                j = i;
            }
        }
        if (best >= w.squaredNorm() - tol) return w.norm();
        if (std::find(corral.begin(), corral.end(), j) == corral.end()) {
            corral.push_back(j);
            lambda.push_back(0.0);
        }

        for (int minor = 0; minor < 100; ++minor) {
            const size_t k = corral.size();
            // affine min-norm point over the corral via the KKT system
            Mat kkt = Mat::Zero(k + 1, k + 1);
            for (size_t a = 0; a < k; ++a)
                for (size_t b = 0; b < k; ++b) kkt(a, b) = p[corral[a]].dot(p[corral[b]]);
            for (size_t a = 0; a < k; ++a) kkt(a, k) = kkt(k, a) = 1.0;
            Vec rhs = Vec::Zero(k + 1);
            rhs[k] = 1.0;
            Vec sol = kkt.fullPivLu().solve(rhs);
            Vec alpha = sol.head(k);

            if (alpha.minCoeff() >= -1e-12) {
                for (size_t a = 0; a < k; ++a) lambda[a] = std::max(0.0, alpha[a]);
                break;
            }
            double theta = 1.0;
            for (size_t a = 0; a < k; ++a)
                if (alpha[a] < 0.0) theta = std::min(theta, lambda[a] / (lambda[a] - alpha[a]));
            std::vector<size_t> keep_idx;
            std::vector<double> keep_lam;
            for (size_t a = 0; a < k; ++a) {
                const double nl = (1.0 - theta) * lambda[a] + theta * alpha[a];
                if (nl > 1e-14) {
                    keep_idx.push_back(corral[a]);
                    keep_lam.push_back(nl);
                }
            }
            if (keep_idx.empty()) {
                keep_idx.push_back(corral[0]);
                keep_lam.push_back(1.0);
            }
            corral = std::move(keep_idx);
            lambda = std::move(keep_lam);
        }

        double lsum = 0.0;
        for (double l : lambda) lsum += l;
        w.setZero();
        for (size_t a = 0; a < corral.size(); ++a) w += (lambda[a] / lsum) * p[corral[a]];
    }
    return w.norm();
}

}  // namespace affinv
