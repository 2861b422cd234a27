#include "affinv/random.hpp"

#include <cmath>
#include <numbers>

#include "affinv/orbit.hpp"

namespace affinv {

namespace {

uint64_t splitmix64(uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(uint64_t seed) : state_(splitmix64(seed ^ 0xA5A5A5A5A5A5A5A5ULL)), seed_(seed) {
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
}

uint64_t Rng::next_u64() {
    state_ = splitmix64(state_);
    return state_;
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

int Rng::uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
}

double Rng::gaussian() {
    // Box-Muller; u1 kept away from 0
    const double u1 = std::max(uniform(), 0x1.0p-53);
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Rng Rng::substream(uint64_t index) const { return Rng(splitmix64(seed_) ^ splitmix64(index)); }

AffineMap random_affine(Rng& rng, int dim, double condition_cap) {
    if (condition_cap < 1.0) throw InvalidArgument("random_affine: condition_cap must be >= 1");
    const double smax = std::sqrt(condition_cap);
    for (int attempt = 0; attempt < 100; ++attempt) {
        Mat left, right;
        if (dim == 2) {
            auto rot = [&] {
                const double th = rng.uniform(0.0, 2.0 * std::numbers::pi);
                Mat r(2, 2);
                r << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
                return r;
            };
            left = rot();
            right = rot();
        } else {
            auto orth = [&] {
                Mat gauss(dim, dim);
                for (int r = 0; r < dim; ++r)
                    for (int c = 0; c < dim; ++c) gauss(r, c) = rng.gaussian();
                Eigen::HouseholderQR<Mat> qr(gauss);
                Mat q = qr.householderQ();
                Mat rmat = qr.matrixQR().triangularView<Eigen::Upper>();
                for (int c = 0; c < dim; ++c)
                    if (rmat(c, c) < 0.0) q.col(c) *= -1.0;
                return q;
            };
            left = orth();
            right = orth();
        }
        Vec singulars(dim);
        for (int i = 0; i < dim; ++i) singulars[i] = rng.uniform(1.0 / smax, smax);
        const Mat linear = left * singulars.asDiagonal() * right;
        Vec t(dim);
        for (int i = 0; i < dim; ++i) t[i] = rng.uniform(-2.0, 2.0);
        if (std::abs(linear.determinant()) > singularity_floor(linear)) return AffineMap(linear, t);
    }
    throw NonConvergence("random_affine: failed to sample a well-conditioned map");
}

AffineMap random_affine(const RandomSpec& spec, int dim) {
    Rng rng(spec.seed);
    return random_affine(rng, dim, spec.condition_cap);
}

ConvexBody random_body(Rng& rng, double noise_level, double condition_cap,
                       const ConvexBody* base) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        try {
            if (base) {
                const AffineMap g = random_affine(rng, base->dim(), condition_cap);
                ConvexBody image = apply_affine(g, *base);
                if (noise_level <= 0.0) return image;
                const double amp = noise_level * image.diameter();
                std::vector<Vec> pts;
                pts.reserve(image.vertex_count());
                for (const auto& v : image.vertices()) {
                    Vec p = v;
                    for (int d = 0; d < image.dim(); ++d) p[d] += rng.uniform(-amp, amp);
                    pts.push_back(std::move(p));
                }
                return canonicalize(pts, image.dim());
            }
            const int count = rng.uniform_int(6, 12);
            std::vector<Vec> pts;
            pts.reserve(count);
            for (int i = 0; i < count; ++i) {
                Vec p(2);
                p << rng.uniform(), rng.uniform();
                pts.push_back(std::move(p));
            }
            return canonicalize(pts, 2);
        } catch (const DegenerateBody&) {
        } catch (const TooFewPoints&) {
        }
    }
    throw NonConvergence("random_body: resampling cap exhausted");
}

ConvexBody random_body(const RandomSpec& spec, const std::optional<ConvexBody>& base) {
    Rng rng(spec.seed);
    return random_body(rng, spec.noise_level, spec.condition_cap, base ? &*base : nullptr);
}

namespace {

ConvexBody ladder_shape(int which) {
    auto ngon = [](int sides) {
        std::vector<Vec> pts;
        pts.reserve(sides);
        for (int k = 0; k < sides; ++k) {
            Vec p(2);
            p << std::cos(2.0 * std::numbers::pi * k / sides),
                std::sin(2.0 * std::numbers::pi * k / sides);
            pts.push_back(std::move(p));
        }
        return canonicalize(pts, 2);
    };
    auto poly = [](std::initializer_list<std::pair<double, double>> pts) {
        std::vector<Vec> out;
        for (const auto& [x, y] : pts) {
            Vec p(2);
            p << x, y;
            out.push_back(std::move(p));
        }
        return canonicalize(out, 2);
    };
    switch (which % 5) {
        case 0: return poly({{0, 0}, {1, 0}, {0, 1}});
        case 1: return ngon(6);
        case 2: return ngon(12);
        case 3: return poly({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
        default: return poly({{0, 0}, {3, 0}, {2.5, 1}, {0, 2}});
    }
}

}  // namespace

ConvexBody sample_far_body(Rng& rng, const ConvexBody& K, double min_objective,
                           const SolverConfig& cfg) {
    for (int attempt = 0; attempt < 12; ++attempt) {
        ConvexBody candidate = random_body(rng, 0.0, 1.0, nullptr);
        if (orbit_distance(candidate, K, cfg).objective >= min_objective) return candidate;
    }
    // Rejection sampling can keep failing for round-ish bases; fall back to a
    // ladder of shape classes (every polygon class used here is far from at
    // least one of them) dressed with a random affine map, which leaves the
    // orbit distance unchanged.
    const int start = static_cast<int>(rng.next_u64() % 5);
    for (int i = 0; i < 5; ++i) {
        const ConvexBody shape = ladder_shape(start + i);
        const ConvexBody candidate =
            apply_affine(random_affine(rng, 2, 4.0), shape);
        if (orbit_distance(candidate, K, cfg).objective >= min_objective) return candidate;
    }
    throw NonConvergence("sample_far_body: could not find a body outside the neighborhood");
}

}  // namespace affinv
