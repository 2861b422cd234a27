#include "affinv/constructor.hpp"

#include <cmath>
#include <iterator>
#include <limits>
#include <sstream>

#include "affinv/symmetry.hpp"

namespace affinv {

namespace {

constexpr uint64_t kCalibrationSeed = 0x0CA11B8A7E5EED01ULL;
constexpr int kCalibrationSamples = 54;
constexpr int kMaxHalvings = 10;
// Graded vertex noise spanning orbit distances from 0 up past the default
// outer threshold (the alignment absorbs most of the raw perturbation).
constexpr double kCalibrationGrades[] = {0.0, 0.002, 0.005, 0.01, 0.02, 0.05, 0.1, 0.15, 0.25};

void check_target_fixed(const ConvexBody& K, const Point& x, double tol_fix) {
    const SymmetryGroup group = affine_symmetry_group(K);
    double worst = 0.0;
    const AffineMap* offender = nullptr;
    for (const auto& g : group.elements) {
        const double disp = (g(x) - x).norm();
        if (disp > worst) {
            worst = disp;
            offender = &g;
        }
    }
    if (worst > tol_fix * K.diameter()) {
        std::ostringstream os;
        os << "target is not fixed by the stabilizer: displacement " << worst << " exceeds "
           << tol_fix * K.diameter();
        throw TargetNotFixed(*offender, worst, os.str());
    }
}

SolverConfig evaluation_config(const InvariantPointDescriptor& desc, const SolverConfig& cfg) {
    SolverConfig out = cfg;
    out.delta_outer = desc.bump.delta_outer;
    out.max_objective = desc.bump.delta_outer;
    out.require_convergence = false;
    return out;
}

}  // namespace

InvariantPointDescriptor build(const ConvexBody& K, const Point& x, BaseInvariantPointId phi,
                               const BumpParams& bump, double tol_fix) {
    if (x.size() != K.dim()) throw DimMismatch("build: target dimension mismatch");
    if (!x.allFinite()) throw InvalidArgument("build: non-finite target");
    validate_bump(bump);
    check_target_fixed(K, x, tol_fix);
    return InvariantPointDescriptor{K, x, bump, phi, false, 0.0};
}

InvariantPointDescriptor build_proper(const ConvexBody& K, const Point& x,
                                      BaseInvariantPointId phi, const BumpParams& bump,
                                      double tol_fix, const SolverConfig& cfg) {
    InvariantPointDescriptor desc = build(K, x, phi, bump, tol_fix);

    const double clearance = facet_clearance(K, x);
    if (clearance <= 0.0) {
        std::ostringstream os;
        os << "build_proper: target has facet clearance " << clearance
           << "; an interior target is required";
        throw TargetNotInterior(os.str());
    }
    desc.proper_mode = true;
    desc.interior_margin = 0.5 * clearance;

    // Shrink the outer threshold until the transported target is interior on
    // every in-neighborhood calibration sample.
    const Rng base_rng(kCalibrationSeed);
    double delta = bump.delta_outer;
    bool calibrated = false;
    for (int halving = 0; halving <= kMaxHalvings; ++halving) {
        bool all_pass = true;
        for (int s = 0; s < kCalibrationSamples && all_pass; ++s) {
            Rng rng = base_rng.substream(static_cast<uint64_t>(s));
            const double grade = kCalibrationGrades[s % std::size(kCalibrationGrades)];
            const ConvexBody sample = random_body(rng, grade, 10.0, &K);
            const AlignmentResult r = orbit_distance(sample, K, cfg);
            if (r.objective >= delta) continue;  // outside the neighborhood; phi handles it
            const double margin =
                0.1 * desc.interior_margin * sample.diameter() / K.diameter();
            if (!contains_point(sample, r.best_map(x), margin)) all_pass = false;
        }
        if (all_pass) {
            calibrated = true;
            break;
        }
        delta *= 0.5;
    }
    if (!calibrated)
        throw MinDeltaReached("build_proper: interior containment kept failing down to delta = " +
                              std::to_string(delta));

    desc.bump.delta_outer = delta;
    if (desc.bump.delta_inner >= delta) desc.bump.delta_inner = 0.25 * delta;
    return desc;
}

void validate_descriptor(const InvariantPointDescriptor& desc, double tol_fix) {
    validate_bump(desc.bump);
    if (desc.target.size() != desc.base_body.dim())
        throw DimMismatch("descriptor: target dimension mismatch");
    check_target_fixed(desc.base_body, desc.target, tol_fix);
    if (desc.proper_mode && !contains_point(desc.base_body, desc.target, desc.interior_margin))
        throw TargetNotInterior("descriptor: interior margin ball does not fit inside the body");
}

EvalDetail evaluate_detailed(const InvariantPointDescriptor& desc, const ConvexBody& A,
                             const SolverConfig& cfg) {
    if (A.dim() != desc.base_body.dim()) throw DimMismatch("evaluate: dimension mismatch");
    const Point base_value = evaluate_base(desc.base_point, A);

    const SolverConfig run_cfg = evaluation_config(desc, cfg);
    AlignmentResult r = orbit_distance(A, desc.base_body, run_cfg);
    const double lambda = bump_from_distance(r.objective, desc.bump);

    EvalDetail detail;
    detail.lambda = lambda;
    detail.objective = r.objective;
    detail.base_value = base_value;
    if (lambda == 0.0) {
        detail.value = base_value;
        return detail;
    }
    // The transported target g*x is stabilizer-invariant because x is fixed
    // by every element of G_K, so any minimizer in the coset gives the same
    // point.
    const Point transported = r.best_map(desc.target);
    if (!transported.allFinite())
        throw EvaluationUnstable("evaluate: transported target is not finite");
    detail.transport = r.best_map;
    detail.value = lambda * transported + (1.0 - lambda) * base_value;
    return detail;
}

Point evaluate(const InvariantPointDescriptor& desc, const ConvexBody& A,
               const SolverConfig& cfg) {
    return evaluate_detailed(desc, A, cfg).value;
}

EquivarianceReport equivariance_report(const InvariantPointDescriptor& desc, int trials,
                                       uint64_t seed, const SolverConfig& cfg) {
    if (trials < 1) throw InvalidArgument("equivariance_report: trials must be >= 1");
    const SolverConfig run_cfg = evaluation_config(desc, cfg);

    EquivarianceReport report;
    report.trials = trials;
    const Rng base_rng(seed);
    for (int t = 0; t < trials; ++t) {
        Rng rng = base_rng.substream(static_cast<uint64_t>(t));
        try {
            const int kind = t % 3;
            ConvexBody a = [&] {
                switch (kind) {
                    case 0: return random_body(rng, 0.0, 10.0, &desc.base_body);
                    case 1: return random_body(rng, 0.003, 10.0, &desc.base_body);
                    default:
                        return sample_far_body(rng, desc.base_body, desc.bump.delta_outer,
                                               run_cfg);
                }
            }();
            const AffineMap h = random_affine(rng, a.dim(), 20.0);
            const ConvexBody ha = apply_affine(h, a);
            const Point lhs = evaluate(desc, ha, cfg);
            const Point rhs = h(evaluate(desc, a, cfg));
            const double err = (lhs - rhs).norm() / ha.diameter();
            report.max_rel_err = std::max(report.max_rel_err, err);
            if (kind == 0) report.max_rel_err_orbit = std::max(report.max_rel_err_orbit, err);
        } catch (const Error&) {
            ++report.failures;
        }
    }
    return report;
}

PropernessReport properness_report(const InvariantPointDescriptor& desc, int trials,
                                   uint64_t seed, const SolverConfig& cfg) {
    if (!desc.proper_mode)
        throw InvalidArgument("properness_report: descriptor is not in proper mode");
    if (trials < 1) throw InvalidArgument("properness_report: trials must be >= 1");
    const SolverConfig run_cfg = evaluation_config(desc, cfg);

    // Noise ladder used to steer samples into the middle bump regime.
    const double ladder[] = {0.0008, 0.0015, 0.003, 0.006, 0.012, 0.025, 0.05};

    PropernessReport report;
    report.trials = trials;
    report.min_rel_clearance = std::numeric_limits<double>::infinity();
    const Rng base_rng(seed);
    for (int t = 0; t < trials; ++t) {
        Rng rng = base_rng.substream(static_cast<uint64_t>(t));
        const int kind = t % 3;
        std::optional<ConvexBody> body;
        if (kind == 0) {
            body = random_body(rng, 0.0, 10.0, &desc.base_body);
        } else if (kind == 1) {
            // walk the ladder until the orbit distance lands strictly between
            // the bump thresholds; keep the last candidate otherwise
            for (double noise : ladder) {
                ConvexBody candidate = random_body(rng, noise, 10.0, &desc.base_body);
                const double d = orbit_distance(candidate, desc.base_body, run_cfg).objective;
                body = std::move(candidate);
                if (d > desc.bump.delta_inner && d < desc.bump.delta_outer) break;
            }
        } else {
            body = sample_far_body(rng, desc.base_body, desc.bump.delta_outer, run_cfg);
        }

        const EvalDetail detail = evaluate_detailed(desc, *body, cfg);
        if (detail.lambda == 0.0)
            ++report.count_far;
        else if (detail.lambda == 1.0)
            ++report.count_orbit;
        else
            ++report.count_mid;

        const double clearance = facet_clearance(*body, detail.value) / body->diameter();
        report.min_rel_clearance = std::min(report.min_rel_clearance, clearance);
        if (clearance <= 0.0) ++report.violations;
    }
    return report;
}

}  // namespace affinv
