#include "affinv/ellipsoid.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace affinv {

namespace {

constexpr long kIterationCap = 1000000;

}  // namespace

void validate_ellipsoid(const Ellipsoid& E) {
    if (E.shape.rows() != E.shape.cols() || E.shape.rows() != E.center.size())
        throw InvalidArgument("ellipsoid: shape/center dimension mismatch");
    if (!E.shape.allFinite() || !E.center.allFinite())
        throw InvalidArgument("ellipsoid: non-finite entry");
    const double scale = std::max(1.0, E.shape.cwiseAbs().maxCoeff());
    if ((E.shape - E.shape.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw InvalidArgument("ellipsoid: shape matrix is not symmetric");
    Eigen::SelfAdjointEigenSolver<Mat> eig(E.shape);
    if (eig.eigenvalues().minCoeff() <= 0.0)
        throw InvalidArgument("ellipsoid: shape matrix is not positive-definite");
}

Ellipsoid loewner_ellipsoid(const ConvexBody& K, double eps,
                            const std::vector<double>& initial_weights) {
    if (!(eps > 0.0 && eps <= 1e-2))
        throw InvalidArgument("loewner_ellipsoid: eps must lie in (0, 1e-2]");
    const int n = K.dim();
    const int d = n + 1;
    const auto& verts = K.vertices();
    const int m = static_cast<int>(verts.size());

    Mat q(d, m);
    for (int i = 0; i < m; ++i) {
        q.col(i).head(n) = verts[i];
        q(n, i) = 1.0;
    }

    Vec u = Vec::Constant(m, 1.0 / m);
    if (!initial_weights.empty()) {
        if (static_cast<int>(initial_weights.size()) != m)
            throw InvalidArgument("loewner_ellipsoid: one weight per vertex required");
        double sum = 0.0;
        for (double w : initial_weights) {
            if (w < 0.0) throw InvalidArgument("loewner_ellipsoid: negative weight");
            sum += w;
        }
        if (sum <= 0.0) throw InvalidArgument("loewner_ellipsoid: weights sum to zero");
        for (int i = 0; i < m; ++i) u[i] = initial_weights[i] / sum;
    }

    // Wolfe-Atwood rule: step toward the most violated outside vertex or away
    // from (possibly dropping) the most over-weighted support vertex,
    // whichever violation is larger. Drop steps make the convergence linear.
    // The ascent targets a gap well below the requested eps so the optimum is
    // pinned tightly; the containment certificate below only needs eps.
    const double gap_target = n * std::min(eps, 1e-12);
    const double gap_required = n * eps;

    Vec kappa(m);
    double gap = std::numeric_limits<double>::infinity();
    for (long iter = 0; iter < kIterationCap; ++iter) {
        Mat x = Mat::Zero(d, d);
        for (int i = 0; i < m; ++i) x.noalias() += u[i] * (q.col(i) * q.col(i).transpose());
        Mat xinv = x.inverse();
        for (int i = 0; i < m; ++i) kappa[i] = q.col(i).dot(xinv * q.col(i));

        int jmax = 0, jmin = -1;
        for (int i = 0; i < m; ++i) {
            if (kappa[i] > kappa[jmax]) jmax = i;
            if (u[i] > 0.0 && (jmin < 0 || kappa[i] < kappa[jmin])) jmin = i;
        }
        gap = kappa[jmax] - d;
        const double away_gap = d - kappa[jmin];
        if (gap <= gap_target && away_gap <= gap_target) break;

        int j;
        double s;
        bool drop = false;
        if (gap >= away_gap) {
            j = jmax;
            s = gap / (d * (kappa[j] - 1.0));
        } else {
            j = jmin;
            s = (kappa[j] - d) / (d * (kappa[j] - 1.0));
            const double clamp = -u[j] / (1.0 - u[j]);
            if (s <= clamp) {
                s = clamp;
                drop = true;
            }
        }
        if (std::abs(s) < 1e-18) break;  // step below representable progress

        u *= (1.0 - s);
        u[j] += s;
        if (drop) u[j] = 0.0;
        u = u.cwiseMax(0.0);
        u /= u.sum();
    }

    if (gap > gap_required)
        throw NonConvergence("loewner_ellipsoid: duality gap did not reach eps within cap");

    Vec c = Vec::Zero(n);
    for (int i = 0; i < m; ++i) c += u[i] * verts[i];
    Mat second = Mat::Zero(n, n);
    for (int i = 0; i < m; ++i) second.noalias() += u[i] * (verts[i] * verts[i].transpose());
    Mat sigma = second - c * c.transpose();
    Mat shape = sigma.inverse() / n;
    shape = ((shape + shape.transpose()) * 0.5).eval();

    Ellipsoid E{c, shape};
    validate_ellipsoid(E);
    return E;
}

AffineMap normalizer(const Ellipsoid& E) {
    validate_ellipsoid(E);
    Eigen::SelfAdjointEigenSolver<Mat> eig(E.shape);
    const Mat root = eig.eigenvectors() *
                     eig.eigenvalues().cwiseSqrt().asDiagonal() *
                     eig.eigenvectors().transpose();
    return AffineMap(root, -(root * E.center));
}

}  // namespace affinv
