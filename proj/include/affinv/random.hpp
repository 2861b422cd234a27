#pragma once

#include <cstdint>
#include <optional>

#include "affinv/geometry.hpp"
#include "affinv/orbit.hpp"

namespace affinv {

/// Deterministic generator spec: identical spec => identical sample stream.
struct RandomSpec {
    uint64_t seed = 0;
    double condition_cap = 10.0;
    double noise_level = 0.0;
};

/// Seeded generator. Distributions are implemented on top of the raw 64-bit
/// stream (never std::uniform_*_distribution) so streams are reproducible
/// across standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed);

    uint64_t next_u64();
    double uniform();  // [0, 1)
    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);  // inclusive bounds
    double gaussian();

    /// Independent stream for trial `index`; reproducible and order-free.
    Rng substream(uint64_t index) const;

private:
    uint64_t state_;
    uint64_t seed_;
};

/// Linear part sampled as rotation * diag(singular values in
/// [1/sqrt(cap), sqrt(cap)]) * rotation, translation uniform in [-2, 2]^n.
AffineMap random_affine(Rng& rng, int dim, double condition_cap);
AffineMap random_affine(const RandomSpec& spec, int dim = 2);

/// With a base body: a random affine image with vertexwise noise of
/// noise_level * diam, re-canonicalized. Without: the hull of 6-12 uniform
/// points in the unit square. Degenerate draws are resampled (cap 100).
ConvexBody random_body(Rng& rng, double noise_level, double condition_cap,
                       const ConvexBody* base);
ConvexBody random_body(const RandomSpec& spec, const std::optional<ConvexBody>& base = {});

/// Random body whose orbit distance from K is at least min_objective,
/// found by rejection; falls back to a body of a different affine class.
ConvexBody sample_far_body(Rng& rng, const ConvexBody& K, double min_objective,
                           const SolverConfig& cfg = {});

}  // namespace affinv
