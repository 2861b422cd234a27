#pragma once

#include <vector>

#include "affinv/ellipsoid.hpp"
#include "affinv/geometry.hpp"

namespace affinv {

/// Finite group of affine maps with gK = K, identity first, remaining
/// elements sorted by matrix entries for reproducible serialization.
struct SymmetryGroup {
    int dim = 0;
    std::vector<AffineMap> elements;
    double scale = 1.0;  // diameter of the source body, used by tolerance checks
    double tol = 1e-6;

    size_t order() const { return elements.size(); }
};

/// Affine subspace base + span(directions) with an orthonormal direction
/// basis. No directions = a single point; a full basis = all of R^n.
struct AffineSubspace {
    Vec base;
    std::vector<Vec> directions;

    int dim() const { return static_cast<int>(base.size()); }
    int subspace_dim() const { return static_cast<int>(directions.size()); }
};

/// Computes the affine stabilizer of K exactly as a finite group.
///
/// Conjugating by the Loewner-ellipsoid normalizer turns every affine
/// symmetry into an orthogonal map permuting the normalized vertices, so the
/// search runs over Gram-compatible vertex bijections; each surviving
/// bijection is refit as an affine map on the original vertices and gated by
/// a Hausdorff check at tol_sym * diam(K).
SymmetryGroup affine_symmetry_group(const ConvexBody& K, double tol_sym = 1e-6);

/// Solves (sigma_i - I) x = -v_i over all group elements; the SVD nullspace
/// spans the subspace and the least-squares particular solution is the base.
AffineSubspace fixed_point_set(const SymmetryGroup& G);

Point project_onto(const AffineSubspace& S, const Point& x);

/// True iff max_g ||g x - x|| <= tol_fix * scale over the group elements.
bool is_member(const SymmetryGroup& G, const Point& x, double tol_fix = 1e-6);

namespace detail {

/// All bijections pi of {0..m-1} with |<w_pi(i), w_pi(k)> - <w_i, w_k>| within
/// tol_gram (and vertex norms within tol_norm), found by backtracking with
/// norm-multiset pruning. Search effort is capped; the cap is generous for
/// polygons with <= 32 vertices.
std::vector<std::vector<int>> gram_matchings(const std::vector<Vec>& from,
                                             const std::vector<Vec>& to, double tol_norm,
                                             double tol_gram, size_t max_matchings = 4096,
                                             size_t max_nodes = 500000);

/// Least-squares orthogonal map sending from[i] -> to[pi[i]] (reflections
/// allowed; no centering).
Mat procrustes(const std::vector<Vec>& from, const std::vector<Vec>& to,
               const std::vector<int>& pi);

/// Least-squares affine fit of from[i] -> to[pi[i]].
AffineMap fit_affine(const std::vector<Vec>& from, const std::vector<Vec>& to,
                     const std::vector<int>& pi);

}  // namespace detail

}  // namespace affinv
