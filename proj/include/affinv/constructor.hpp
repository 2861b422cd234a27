#pragma once

#include <optional>

#include "affinv/geometry.hpp"
#include "affinv/invariant_points.hpp"
#include "affinv/orbit.hpp"
#include "affinv/random.hpp"

namespace affinv {

class TargetNotFixed : public Error {
public:
    TargetNotFixed(AffineMap offender, double displacement, const std::string& what)
        : Error(ErrorKind::Validation, what),
          offender_(std::move(offender)),
          displacement_(displacement) {}

    const AffineMap& offender() const { return offender_; }
    double displacement() const { return displacement_; }

private:
    AffineMap offender_;
    double displacement_;
};

/// Serialized recipe for the constructed invariant point: evaluating it on a
/// body A blends the transported target (through the orbit retraction) with a
/// built-in base point, weighted by the invariant bump.
struct InvariantPointDescriptor {
    ConvexBody base_body;
    Point target;
    BumpParams bump;
    BaseInvariantPointId base_point = BaseInvariantPointId::centroid;
    bool proper_mode = false;
    double interior_margin = 0.0;  // meaningful only when proper_mode
};

/// Validates x against the stabilizer of K (throws TargetNotFixed with the
/// offending element otherwise) and returns a non-proper descriptor.
InvariantPointDescriptor build(const ConvexBody& K, const Point& x, BaseInvariantPointId phi,
                               const BumpParams& bump = {}, double tol_fix = 1e-6);

/// build() plus interiority: requires x strictly inside K, sets the interior
/// margin to half the facet clearance of x, and shrinks delta_outer by
/// halving until the transported target stays interior on a calibration
/// sample of near-orbit bodies. Throws TargetNotInterior or MinDeltaReached.
InvariantPointDescriptor build_proper(const ConvexBody& K, const Point& x,
                                      BaseInvariantPointId phi, const BumpParams& bump = {},
                                      double tol_fix = 1e-6, const SolverConfig& cfg = {});

/// Re-runs build-time validation (used after deserializing a descriptor).
void validate_descriptor(const InvariantPointDescriptor& desc, double tol_fix = 1e-6);

struct EvalDetail {
    Point value;
    double lambda = 0.0;
    double objective = 0.0;
    Point base_value;                    // phi(A)
    std::optional<AffineMap> transport;  // g* when lambda > 0
};

Point evaluate(const InvariantPointDescriptor& desc, const ConvexBody& A,
               const SolverConfig& cfg = {});
EvalDetail evaluate_detailed(const InvariantPointDescriptor& desc, const ConvexBody& A,
                             const SolverConfig& cfg = {});

struct EquivarianceReport {
    int trials = 0;
    double max_rel_err = 0.0;        // over all trials, relative to diam(hA)
    double max_rel_err_orbit = 0.0;  // over exact orbit members only
    int failures = 0;
};

/// Samples trials of (h, A) with A cycling through exact orbit members,
/// perturbed orbit members and far bodies, and compares evaluate(desc, hA)
/// against h(evaluate(desc, A)).
EquivarianceReport equivariance_report(const InvariantPointDescriptor& desc, int trials,
                                       uint64_t seed, const SolverConfig& cfg = {});

struct PropernessReport {
    int trials = 0;
    int violations = 0;
    double min_rel_clearance = 0.0;  // min facet clearance / diam over the sample
    int count_far = 0;               // lambda = 0
    int count_mid = 0;               // lambda in (0, 1)
    int count_orbit = 0;             // lambda = 1
};

/// Samples bodies across all three bump regimes and checks that the
/// evaluated point stays strictly interior.
PropernessReport properness_report(const InvariantPointDescriptor& desc, int trials,
                                   uint64_t seed, const SolverConfig& cfg = {});

}  // namespace affinv
