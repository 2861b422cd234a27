#include "affinv/orbit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "affinv/ellipsoid.hpp"
#include "affinv/symmetry.hpp"

namespace affinv {

namespace {

using Params = std::array<double, 6>;  // row-major linear part, then translation

Params pack(const AffineMap& g) {
    return {g.linear()(0, 0), g.linear()(0, 1), g.linear()(1, 0),
            g.linear()(1, 1), g.translation()[0], g.translation()[1]};
}

AffineMap unpack(const Params& x) {
    Mat linear(2, 2);
    linear << x[0], x[1], x[2], x[3];
    Vec t(2);
    t << x[4], x[5];
    return AffineMap(linear, t);
}

bool params_less(const Params& a, const Params& b) {
    for (int i = 0; i < 6; ++i) {
        if (a[i] < b[i]) return true;
        if (a[i] > b[i]) return false;
    }
    return false;
}

double params_distance(const Params& a, const Params& b) {
    double d = 0.0;
    for (int i = 0; i < 6; ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

// Objective on raw parameters. Works for any linear part, including
// near-singular ones, so the simplex can roam freely.
class Objective {
public:
    Objective(const ConvexBody& K, const ConvexBody& A)
        : body_(K), target_(A), vol_k_(volume(K)), vol_a_(volume(A)) {}

    double operator()(const Params& x) const {
        const double det = x[0] * x[3] - x[1] * x[2];
        const auto& kv = body_.vertices();
        std::vector<Vec> image(kv.size());
        for (size_t i = 0; i < kv.size(); ++i) {
            Vec w(2);
            w[0] = x[0] * kv[i][0] + x[1] * kv[i][1] + x[4];
            w[1] = x[2] * kv[i][0] + x[3] * kv[i][1] + x[5];
            image[i] = std::move(w);
        }
        if (det < 0.0) std::reverse(image.begin(), image.end());
        const double inter = detail::clip_area(image, target_);
        const double vol_g = std::abs(det) * vol_k_;
        return std::max(0.0, (vol_g + vol_a_ - 2.0 * inter) / vol_a_);
    }

    double target_diameter() const { return target_.diameter(); }

private:
    const ConvexBody& body_;
    const ConvexBody& target_;
    double vol_k_;
    double vol_a_;
};

struct SimplexResult {
    Params x;
    double fx;
};

// Classic Nelder-Mead on 6 parameters, deterministic throughout.
SimplexResult nelder_mead(const Objective& f, const Params& start, const Params& step,
                          int max_iter, double stop_objective) {
    constexpr int n = 6;
    std::array<Params, n + 1> xs;
    std::array<double, n + 1> fs;
    xs[0] = start;
    fs[0] = f(start);
    for (int i = 0; i < n; ++i) {
        xs[i + 1] = start;
        xs[i + 1][i] += step[i];
        fs[i + 1] = f(xs[i + 1]);
    }

    std::array<int, n + 1> order;
    for (int iter = 0; iter < max_iter; ++iter) {
        for (int i = 0; i <= n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (fs[a] != fs[b]) return fs[a] < fs[b];
            return params_less(xs[a], xs[b]);
        });
        const int best = order[0], worst = order[n], second_worst = order[n - 1];
        if (fs[best] <= stop_objective) break;
        if (fs[worst] - fs[best] <= 1e-15 * (1.0 + std::abs(fs[best]))) break;

        Params centroid{};
        for (int i = 0; i <= n; ++i)
            if (i != worst)
                for (int d = 0; d < n; ++d) centroid[d] += xs[i][d] / n;

        auto blend = [&](double coef) {
            Params p;
            for (int d = 0; d < n; ++d) p[d] = centroid[d] + coef * (xs[worst][d] - centroid[d]);
            return p;
        };

        const Params reflected = blend(-1.0);
        const double fr = f(reflected);
        if (fr < fs[best]) {
            const Params expanded = blend(-2.0);
            const double fe = f(expanded);
            if (fe < fr) {
                xs[worst] = expanded;
                fs[worst] = fe;
            } else {
                xs[worst] = reflected;
                fs[worst] = fr;
            }
            continue;
        }
        if (fr < fs[second_worst]) {
            xs[worst] = reflected;
            fs[worst] = fr;
            continue;
        }
        const Params contracted = blend(fr < fs[worst] ? -0.5 : 0.5);
        const double fc = f(contracted);
        if (fc < std::min(fr, fs[worst])) {
            xs[worst] = contracted;
            fs[worst] = fc;
            continue;
        }
        for (int i = 0; i <= n; ++i) {  // shrink toward best
            if (i == best) continue;
            for (int d = 0; d < n; ++d) xs[i][d] = xs[best][d] + 0.5 * (xs[i][d] - xs[best][d]);
            fs[i] = f(xs[i]);
        }
    }

    int best = 0;
    for (int i = 1; i <= n; ++i)
        if (fs[i] < fs[best] || (fs[i] == fs[best] && params_less(xs[i], xs[best]))) best = i;
    return {xs[best], fs[best]};
}

struct SeedSet {
    std::vector<Params> seeds;
    size_t matching_count = 0;  // seeds[0..matching_count) came from vertex matchings
};

SeedSet build_seeds(const ConvexBody& A, const ConvexBody& K, const SolverConfig& cfg) {
    const AffineMap tk = normalizer(loewner_ellipsoid(K));
    const AffineMap ta = normalizer(loewner_ellipsoid(A));
    const AffineMap ta_inv = invert(ta);

    SeedSet out;

    // Gram-compatible vertex matchings, refit on the original vertices; these
    // land essentially on the optimum for exact orbit members.
    if (A.vertex_count() == K.vertex_count()) {
        const auto& kv = K.vertices();
        const auto& av = A.vertices();
        std::vector<Vec> wk(kv.size()), wa(av.size());
        for (size_t i = 0; i < kv.size(); ++i) wk[i] = tk(kv[i]);
        for (size_t i = 0; i < av.size(); ++i) wa[i] = ta(av[i]);
        const auto matchings = detail::gram_matchings(wk, wa, 0.12, 0.25, 48, 300000);
        for (const auto& pi : matchings) {
            try {
                out.seeds.push_back(pack(detail::fit_affine(kv, av, pi)));
            } catch (const SingularMap&) {
            }
        }
    }
    out.matching_count = out.seeds.size();

    for (int r = 0; r < cfg.rotation_steps; ++r) {
        const double theta = 2.0 * std::numbers::pi * r / cfg.rotation_steps;
        for (int refl = 0; refl < (cfg.use_reflections ? 2 : 1); ++refl) {
            Mat q(2, 2);
            q << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
            if (refl) q.col(1) *= -1.0;
            out.seeds.push_back(pack(compose(ta_inv, compose(AffineMap(q, Vec::Zero(2)), tk))));
        }
    }
    return out;
}

double det_of(const Params& x) { return x[0] * x[3] - x[1] * x[2]; }

double linear_floor(const Params& x) {
    const double norm2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
    return 1e-12 * norm2;  // matches singularity_floor for n = 2
}

}  // namespace

void validate_bump(const BumpParams& params) {
    if (!(params.delta_inner > 0.0) || !(params.delta_outer > params.delta_inner) ||
        !std::isfinite(params.delta_outer))
        throw InvalidArgument("bump params: need 0 < delta_inner < delta_outer < inf");
}

double alignment_objective(const AffineMap& g, const ConvexBody& K, const ConvexBody& A) {
    if (K.dim() != 2 || A.dim() != 2 || g.dim() != 2)
        throw UnsupportedDimension("alignment_objective: only n = 2 is supported");
    return Objective(K, A)(pack(g));
}

AlignmentResult orbit_distance(const ConvexBody& A, const ConvexBody& K,
                               const SolverConfig& cfg) {
    if (K.dim() != 2 || A.dim() != 2)
        throw UnsupportedDimension("orbit_distance: only n = 2 is supported");

    const Objective f(K, A);
    const SeedSet seed_set = build_seeds(A, K, cfg);
    const std::vector<Params>& seeds = seed_set.seeds;

    struct Scored {
        Params x;
        double fx;
        bool matching;
    };
    std::vector<Scored> scored;
    scored.reserve(seeds.size());
    for (size_t i = 0; i < seeds.size(); ++i)
        scored.push_back({seeds[i], f(seeds[i]), i < seed_set.matching_count});

    // Matching seeds are few and precise; always refine them. Grid seeds are
    // refined best-first up to cfg.refine_top.
    std::vector<size_t> refine_order(scored.size());
    for (size_t i = 0; i < scored.size(); ++i) refine_order[i] = i;
    std::sort(refine_order.begin(), refine_order.end(), [&](size_t a, size_t b) {
        if (scored[a].matching != scored[b].matching) return scored[a].matching;
        if (scored[a].fx != scored[b].fx) return scored[a].fx < scored[b].fx;
        return params_less(scored[a].x, scored[b].x);
    });

    const double diam_a = f.target_diameter();
    Params best_x = scored[refine_order[0]].x;
    double best_f = scored[refine_order[0]].fx;
    int restarts = 0;
    std::vector<SimplexResult> refined;

    int grid_refinements = 0;
    for (size_t idx : refine_order) {
        const bool is_matching = scored[idx].matching;
        if (!is_matching && grid_refinements >= cfg.refine_top) break;
        SimplexResult r{scored[idx].x, scored[idx].fx};
        if (r.fx > cfg.stop_objective) {
            Params step;
            double lin_scale = 0.0;
            for (int d = 0; d < 4; ++d) lin_scale = std::max(lin_scale, std::abs(r.x[d]));
            lin_scale = std::max(lin_scale, 0.1);
            for (int d = 0; d < 4; ++d) step[d] = 0.05 * lin_scale;
            step[4] = step[5] = 0.05 * diam_a;
            r = nelder_mead(f, r.x, step, cfg.simplex_max_iter, cfg.stop_objective);
        }
        ++restarts;
        if (!is_matching) ++grid_refinements;
        refined.push_back(r);
        if (std::abs(det_of(r.x)) <= linear_floor(r.x)) continue;
        if (r.fx < best_f || (r.fx == best_f && params_less(r.x, best_x))) {
            best_f = r.fx;
            best_x = r.x;
        }
        if (best_f <= cfg.stop_objective) break;
    }

    // Polish pass: restart the simplex tightly around the winner. This keeps
    // results stable across affinely moved copies of the same problem, where
    // seed ordering can differ.
    if (best_f > cfg.stop_objective) {
        Params step;
        double lin_scale = 0.0;
        for (int d = 0; d < 4; ++d) lin_scale = std::max(lin_scale, std::abs(best_x[d]));
        lin_scale = std::max(lin_scale, 0.1);
        for (int d = 0; d < 4; ++d) step[d] = 0.005 * lin_scale;
        step[4] = step[5] = 0.005 * diam_a;
        const SimplexResult polished =
            nelder_mead(f, best_x, step, cfg.simplex_max_iter, cfg.stop_objective);
        if (std::abs(det_of(polished.x)) > linear_floor(polished.x) &&
            (polished.fx < best_f ||
             (polished.fx == best_f && params_less(polished.x, best_x)))) {
            best_f = polished.fx;
            best_x = polished.x;
        }
    }

    int disagreements = 0;
    for (const auto& r : refined) {
        if (std::abs(r.fx - best_f) <= std::max(1e-3, 0.05 * best_f) &&
            params_distance(r.x, best_x) > 1e-3 * (1.0 + std::abs(best_x[0])))
            ++disagreements;
    }

    AffineMap best_map = unpack(best_x);
    const bool converged = best_f <= cfg.max_objective;
    if (cfg.require_convergence && !converged)
        throw NonConvergence("orbit_distance: no restart reached the requested objective");

    return AlignmentResult{best_map, best_f, apply_affine(best_map, K),
                           restarts, converged, disagreements};
}

AlignmentResult retract(const ConvexBody& A, const ConvexBody& K, const SolverConfig& cfg) {
    AlignmentResult r = orbit_distance(A, K, cfg);
    if (r.objective >= cfg.delta_outer)
        throw OutsideNeighborhood("retract: objective " + std::to_string(r.objective) +
                                  " is outside the neighborhood bound " +
                                  std::to_string(cfg.delta_outer));
    return r;
}

double bump_from_distance(double distance, const BumpParams& params) {
    validate_bump(params);
    const double t = (params.delta_outer - distance) / (params.delta_outer - params.delta_inner);
    return std::clamp(t, 0.0, 1.0);
}

double bump(const ConvexBody& A, const ConvexBody& K, const BumpParams& params,
            const SolverConfig& cfg) {
    validate_bump(params);
    try {
        return bump_from_distance(orbit_distance(A, K, cfg).objective, params);
    } catch (const Error& e) {
        std::fprintf(stderr, "warning: bump: orbit distance failed (%s); returning 0\n", e.what());
        return 0.0;
    }
}

}  // namespace affinv
