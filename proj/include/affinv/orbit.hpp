#pragma once

#include "affinv/geometry.hpp"

namespace affinv {

/// Multi-start alignment solver configuration. Seeds combine a fixed
/// orthogonal sample (rotation resolution pi/36, optionally composed with a
/// reflection) conjugated through the Loewner normalizers of both bodies with
/// Gram-compatible vertex matchings; the most promising seeds are refined by
/// simplex descent.
struct SolverConfig {
    int rotation_steps = 72;
    bool use_reflections = true;
    int refine_top = 8;        // grid seeds refined in addition to matching seeds
    int simplex_max_iter = 500;
    double stop_objective = 1e-13;  // early out once alignment is this good
    double max_objective = 0.2;     // "converged" means the best objective is below this
    bool require_convergence = false;
    double delta_outer = 0.2;  // neighborhood bound used by retract()
};

/// Two sublevel thresholds of the orbit distance: the bump is 1 at or below
/// delta_inner and 0 at or beyond delta_outer.
struct BumpParams {
    double delta_inner = 0.02;
    double delta_outer = 0.2;
};

void validate_bump(const BumpParams& params);

struct AlignmentResult {
    AffineMap best_map;
    double objective = 0.0;
    ConvexBody retracted_body;  // always apply_affine(best_map, K)
    int restarts_used = 0;
    bool converged = false;
    // Refinements that tie the best objective with a materially different
    // map. Nonzero values usually just reflect the stabilizer coset; large
    // counts on near-orbit bodies indicate an ambiguous minimum.
    int disagreeing_restarts = 0;
};

/// J_A(g) = symmetric_difference_volume(gK, A) / volume(A). Invariant under
/// (g, A) -> (h o g, hA); zero exactly when gK = A.
double alignment_objective(const AffineMap& g, const ConvexBody& K, const ConvexBody& A);

/// Approximately minimizes J_A over the affine group (6 parameters, n = 2).
AlignmentResult orbit_distance(const ConvexBody& A, const ConvexBody& K,
                               const SolverConfig& cfg = {});

/// orbit_distance with the retraction contract: throws OutsideNeighborhood
/// when the final objective is >= cfg.delta_outer. The returned map is only
/// coset-unique; consumers must use it through stabilizer-invariant
/// quantities.
AlignmentResult retract(const ConvexBody& A, const ConvexBody& K, const SolverConfig& cfg = {});

/// Invariant bump: 1 on the orbit, 0 outside the outer sublevel set, linear
/// ramp in between. Solver failures degrade to 0 with a warning on stderr.
double bump(const ConvexBody& A, const ConvexBody& K, const BumpParams& params,
            const SolverConfig& cfg = {});

double bump_from_distance(double distance, const BumpParams& params);

}  // namespace affinv
