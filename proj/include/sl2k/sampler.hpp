#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "sl2k/genericity.hpp"
#include "sl2k/rng.hpp"

namespace sl2k {

// Deliberate defect injected by test-mode runs to demonstrate that a
// suite actually measures its identity.
enum class Mutation {
    none,
    bias,             // perturb one side of the suite's comparison
    flip_dright_sign, // negate the level-dependent sign of the space differential
    beta_a_half       // drop the 1/2 factor from the closed A-case primitive
};

struct SamplerConfig {
    std::uint64_t seed = 42;
    long trials = 10000;
    double box_n = 2.0;   // bound on the unipotent coordinate components
    double log_a = 1.0;   // bound on |log lambda| for the torus coordinate
    double margin = 1e-4; // genericity margin applied to sampled configurations
    std::optional<double> tol_override;
    Mutation mutation = Mutation::none;
};

// Group element together with the NAK coordinates it was built from.
template <Field K>
struct GroupSample {
    K n;
    double log_lambda;
    Mat2<K> g;
};

namespace detail {

inline Mat2<real> sample_unitary(Rng& rng, real) {
    return rotation(rng.uniform(0.0, 2.0 * std::numbers::pi));
}

// Haar sample of SU(2): |a|^2 uniform in [0,1], independent phases.
inline Mat2<cplx> sample_unitary(Rng& rng, cplx) {
    const double u = rng.uniform();
    const double p1 = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double p2 = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const cplx a = std::sqrt(1.0 - u) * cplx(std::cos(p1), std::sin(p1));
    const cplx b = std::sqrt(u) * cplx(std::cos(p2), std::sin(p2));
    return Mat2<cplx>(a, b, -conj(b), conj(a));
}

inline real sample_box(Rng& rng, double r, real) { return rng.uniform(-r, r); }

inline cplx sample_box(Rng& rng, double r, cplx) {
    return cplx(rng.uniform(-r, r), rng.uniform(-r, r));
}

} // namespace detail

template <Field K>
GroupSample<K> sample_group(Rng& rng, const SamplerConfig& cfg = {}) {
    const K x = detail::sample_box(rng, cfg.box_n, K{});
    const double ll = rng.uniform(-cfg.log_a, cfg.log_a);
    const Mat2<K> g = unipotent(x) * torus<K>(ll) * detail::sample_unitary(rng, K{});
    return GroupSample<K>{x, ll, g};
}

// Nonzero scalar for the N-case orbit coordinate; modulus bounded away
// from zero by the configuration margin.
template <Field K>
std::optional<K> sample_orbit_scalar(Rng& rng, const SamplerConfig& cfg) {
    const K x = detail::sample_box(rng, 3.0, K{});
    if (std::abs(x) < cfg.margin) return std::nullopt;
    return x;
}

// count vectors with every pair projectively independent at the
// configuration margin; nullopt when the draw misses.
template <Field K>
std::optional<std::vector<Vec2<K>>> sample_generic_vectors(Rng& rng, int count,
                                                           const SamplerConfig& cfg) {
    GenericityConfig gc{cfg.margin, cfg.margin, cfg.margin};
    std::vector<Vec2<K>> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const K a = detail::sample_box(rng, 2.0, K{});
        const K b = detail::sample_box(rng, 2.0, K{});
        if (abs_sq(a) + abs_sq(b) < 0.01) return std::nullopt;
        Vec2<K> v(a, b);
        for (const auto& u : out)
            if (!generic_vec_pair(u, v, gc)) return std::nullopt;
        out.push_back(v);
    }
    return out;
}

// Boundary point uniform on the projective circle.
inline ProjPoint sample_point(Rng& rng) {
    const double psi = rng.uniform(0.0, std::numbers::pi);
    return ProjPoint(std::sin(psi), std::cos(psi));
}

// count boundary pairs whose 2*count points are pairwise distinct at the
// configuration margin and, when require_finite is set, all at least the
// margin away from infinity.
inline std::optional<std::vector<PairGA>> sample_generic_pairs(Rng& rng, int count,
                                                               const SamplerConfig& cfg,
                                                               bool require_finite = true) {
    std::vector<ProjPoint> pts;
    pts.reserve(2 * count);
    for (int i = 0; i < 2 * count; ++i) {
        const ProjPoint p = sample_point(rng);
        if (require_finite && p.near_infinity(cfg.margin)) return std::nullopt;
        for (const auto& q : pts)
            if (proj_dist(p, q) < cfg.margin) return std::nullopt;
        pts.push_back(p);
    }
    std::vector<PairGA> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.emplace_back(pts[2 * i], pts[2 * i + 1], cfg.margin);
    return out;
}

} // namespace sl2k
