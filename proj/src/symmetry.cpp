#include "affinv/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace affinv {

namespace detail {

namespace {

struct MatchSearch {
    const std::vector<Vec>& from;
    const std::vector<Vec>& to;
    double tol_norm;
    double tol_gram;
    size_t max_matchings;
    size_t max_nodes;

    std::vector<double> norm_from, norm_to;
    std::vector<int> assignment;
    std::vector<bool> used;
    std::vector<std::vector<int>> out;
    size_t nodes = 0;

    void run() {
        const size_t m = from.size();
        norm_from.resize(m);
        norm_to.resize(m);
        for (size_t i = 0; i < m; ++i) {
            norm_from[i] = from[i].norm();
            norm_to[i] = to[i].norm();
        }
        assignment.assign(m, -1);
        used.assign(m, false);
        descend(0);
    }

    void descend(size_t i) {
        if (out.size() >= max_matchings || nodes >= max_nodes) return;
        const size_t m = from.size();
        if (i == m) {
            out.push_back(assignment);
            return;
        }
        for (size_t j = 0; j < m; ++j) {
            if (used[j]) continue;
            ++nodes;
            if (std::abs(norm_to[j] - norm_from[i]) > tol_norm) continue;
            bool ok = true;
            for (size_t k = 0; k < i; ++k) {
                const double want = from[i].dot(from[k]);
                const double got = to[j].dot(to[assignment[k]]);
                if (std::abs(got - want) > tol_gram) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            assignment[i] = static_cast<int>(j);
            used[j] = true;
            descend(i + 1);
            used[j] = false;
            assignment[i] = -1;
        }
    }
};

}  // namespace

std::vector<std::vector<int>> gram_matchings(const std::vector<Vec>& from,
                                             const std::vector<Vec>& to, double tol_norm,
                                             double tol_gram, size_t max_matchings,
                                             size_t max_nodes) {
    if (from.size() != to.size() || from.empty()) return {};
    MatchSearch search{from, to, tol_norm, tol_gram, max_matchings, max_nodes, {}, {}, {}, {}, {}, 0};
    search.run();
    return search.out;
}

Mat procrustes(const std::vector<Vec>& from, const std::vector<Vec>& to,
               const std::vector<int>& pi) {
    const int n = static_cast<int>(from.front().size());
    Mat h = Mat::Zero(n, n);
    for (size_t i = 0; i < from.size(); ++i)
        h.noalias() += to[pi[i]] * from[i].transpose();
    Eigen::JacobiSVD<Mat> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return svd.matrixU() * svd.matrixV().transpose();
}

AffineMap fit_affine(const std::vector<Vec>& from, const std::vector<Vec>& to,
                     const std::vector<int>& pi) {
    const int n = static_cast<int>(from.front().size());
    const int m = static_cast<int>(from.size());
    Mat design(m, n + 1);
    Mat target(m, n);
    for (int i = 0; i < m; ++i) {
        design.row(i).head(n) = from[i].transpose();
        design(i, n) = 1.0;
        target.row(i) = to[pi[i]].transpose();
    }
    Mat sol = design.colPivHouseholderQr().solve(target);  // (n+1) x n
    Mat linear = sol.topRows(n).transpose();
    Vec translation = sol.row(n).transpose();
    return AffineMap(linear, translation);
}

}  // namespace detail

namespace {

bool map_entries_less(const AffineMap& a, const AffineMap& b) {
    const int n = a.dim();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            if (a.linear()(r, c) < b.linear()(r, c)) return true;
            if (a.linear()(r, c) > b.linear()(r, c)) return false;
        }
    for (int r = 0; r < n; ++r) {
        if (a.translation()[r] < b.translation()[r]) return true;
        if (a.translation()[r] > b.translation()[r]) return false;
    }
    return false;
}

bool is_identity_permutation(const std::vector<int>& pi) {
    for (size_t i = 0; i < pi.size(); ++i)
        if (pi[i] != static_cast<int>(i)) return false;
    return true;
}

}  // namespace

SymmetryGroup affine_symmetry_group(const ConvexBody& K, double tol_sym) {
    if (tol_sym <= 0.0) throw InvalidArgument("affine_symmetry_group: tol_sym must be > 0");
    const int n = K.dim();
    const double diam = K.diameter();
    const auto& verts = K.vertices();
    const size_t m = verts.size();

    const AffineMap t = normalizer(loewner_ellipsoid(K));
    std::vector<Vec> w(m);
    for (size_t i = 0; i < m; ++i) w[i] = t(verts[i]);
    double diam_w = 0.0;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) diam_w = std::max(diam_w, (w[i] - w[j]).norm());

    const double tol_w = tol_sym * diam_w;
    const auto matchings = detail::gram_matchings(w, w, tol_w, 4.0 * tol_w);

    struct Candidate {
        std::vector<int> pi;
        AffineMap map;
    };
    std::vector<Candidate> accepted;
    for (const auto& pi : matchings) {
        if (is_identity_permutation(pi)) {
            accepted.push_back({pi, AffineMap::identity(n)});
            continue;
        }
        const Mat q = detail::procrustes(w, w, pi);
        double residual = 0.0;
        for (size_t i = 0; i < m; ++i) residual = std::max(residual, (q * w[i] - w[pi[i]]).norm());
        if (residual > 8.0 * tol_w) continue;
        // Refit on the original vertices: the bijection is combinatorial, so
        // the least-squares affine map recovers the symmetry to full
        // precision independent of the ellipsoid solve.
        try {
            AffineMap g = detail::fit_affine(verts, verts, pi);
            if (hausdorff_distance(apply_affine(g, K), K) > tol_sym * diam) continue;
            accepted.push_back({pi, std::move(g)});
        } catch (const SingularMap&) {
            continue;
        }
    }

    for (size_t a = 0; a < accepted.size(); ++a)
        for (size_t b = a + 1; b < accepted.size(); ++b)
            if (map_distance(accepted[a].map, accepted[b].map, diam) <= tol_sym) {
                std::ostringstream os;
                os << "affine_symmetry_group: two distinct vertex bijections give maps within "
                   << tol_sym << "; tolerance is misconfigured for this body";
                throw ToleranceAmbiguity(os.str());
            }

    // Exact closure check on the permutation representation.
    std::vector<std::vector<int>> perms;
    perms.reserve(accepted.size());
    for (const auto& c : accepted) perms.push_back(c.pi);
    auto has_perm = [&](const std::vector<int>& p) {
        return std::find(perms.begin(), perms.end(), p) != perms.end();
    };
    for (const auto& p : perms) {
        std::vector<int> inv(m);
        for (size_t i = 0; i < m; ++i) inv[p[i]] = static_cast<int>(i);
        if (!has_perm(inv))
            throw ToleranceAmbiguity("affine_symmetry_group: accepted set not closed under inversion");
        for (const auto& r : perms) {
            std::vector<int> comp(m);
            for (size_t i = 0; i < m; ++i) comp[i] = p[r[i]];
            if (!has_perm(comp))
                throw ToleranceAmbiguity(
                    "affine_symmetry_group: accepted set not closed under composition");
        }
    }

    SymmetryGroup group;
    group.dim = n;
    group.scale = diam;
    group.tol = tol_sym;
    group.elements.push_back(AffineMap::identity(n));
    std::vector<AffineMap> rest;
    for (auto& c : accepted)
        if (!is_identity_permutation(c.pi)) rest.push_back(std::move(c.map));
    std::sort(rest.begin(), rest.end(), map_entries_less);
    for (auto& g : rest) group.elements.push_back(std::move(g));
    return group;
}

AffineSubspace fixed_point_set(const SymmetryGroup& G) {
    const int n = G.dim;
    if (n < 1 || G.elements.empty()) throw InvalidGroup("fixed_point_set: empty group");

    std::vector<const AffineMap*> gens;
    for (const auto& g : G.elements) gens.push_back(&g);

    Mat stack(static_cast<int>(gens.size()) * n, n);
    Vec rhs(static_cast<int>(gens.size()) * n);
    for (size_t i = 0; i < gens.size(); ++i) {
        stack.middleRows(static_cast<int>(i) * n, n) = gens[i]->linear() - Mat::Identity(n, n);
        rhs.segment(static_cast<int>(i) * n, n) = -gens[i]->translation();
    }

    Eigen::JacobiSVD<Mat> svd(stack, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double smax = svd.singularValues().size() ? svd.singularValues()[0] : 0.0;

    if (smax <= 0.0) {
        if (rhs.norm() > 0.0)
            throw EmptyFixedSet("fixed_point_set: pure translations fix no point");
        AffineSubspace full{Vec::Zero(n), {}};
        for (int i = 0; i < n; ++i) full.directions.push_back(Mat::Identity(n, n).col(i));
        return full;
    }

    const double cut = 1e-9 * smax;
    Vec inv_sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < inv_sv.size(); ++i) {
        if (inv_sv[i] > cut) {
            inv_sv[i] = 1.0 / inv_sv[i];
            ++rank;
        } else {
            inv_sv[i] = 0.0;
        }
    }
    Vec base = svd.matrixV() * inv_sv.asDiagonal() *
               svd.matrixU().leftCols(inv_sv.size()).transpose() * rhs;

    const double residual = (stack * base - rhs).norm();
    if (residual > 1e-6 * (smax * std::max(G.scale, 1.0) + rhs.norm()))
        throw EmptyFixedSet("fixed_point_set: inconsistent group, no common fixed point");

    AffineSubspace s{base, {}};
    for (int i = rank; i < n; ++i) s.directions.push_back(svd.matrixV().col(i));
    return s;
}

Point project_onto(const AffineSubspace& S, const Point& x) {
    if (x.size() != S.base.size()) throw DimMismatch("project_onto: dimension mismatch");
    Vec p = S.base;
    for (const auto& d : S.directions) p += (x - S.base).dot(d) * d;
    return p;
}

bool is_member(const SymmetryGroup& G, const Point& x, double tol_fix) {
    if (static_cast<int>(x.size()) != G.dim) throw DimMismatch("is_member: dimension mismatch");
    for (const auto& g : G.elements)
        if ((g(x) - x).norm() > tol_fix * G.scale) return false;
    return true;
}

}  // namespace affinv
