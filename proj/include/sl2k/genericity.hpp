#pragma once

#include "sl2k/projective.hpp"
#include "sl2k/transporters.hpp"

namespace sl2k {

// Margins separating configurations from the measure-zero sets on which
// the orbit parametrizations degenerate.  Predicates are monotone: a
// configuration accepted at some margins is accepted at any smaller ones.
struct GenericityConfig {
    double indep_margin = tol::indep_margin;        // relative |det(u|v)| lower bound
    double distinct_margin = tol::distinct_margin;  // projective distance lower bound
    double orientation_margin = tol::log_guard;     // |c^2| lower bound for triples
};

// A pair of vectors is generic when projectively independent:
// |det(u|v)| >= indep_margin * ||u|| ||v||.
template <Field K>
bool generic_vec_pair(const Vec2<K>& u, const Vec2<K>& v, const GenericityConfig& cfg = {}) {
    return std::abs(det_pair(u, v)) >= cfg.indep_margin * std::sqrt(norm_sq(u) * norm_sq(v));
}

// Orbit parameter of a generic vector pair under the unipotent kernel:
// the configuration (u, v) is carried to (e1, d e2) with d = det(u|v).
template <Field K>
K orbit_parameter_N(const Vec2<K>& u, const Vec2<K>& v, const GenericityConfig& cfg = {}) {
    if (!generic_vec_pair(u, v, cfg))
        fail(ErrorKind::dependent_pair, "orbit_parameter_N: pair dependent within indep margin");
    return det_pair(u, v);
}

// A pair of boundary pairs is generic when all four points are pairwise
// distinct by the projective margin.
inline bool generic_pair_of_pairs(const PairGA& x, const PairGA& y,
                                  const GenericityConfig& cfg = {}) {
    const ProjPoint pts[4] = {x.first, x.second, y.first, y.second};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (proj_dist(pts[i], pts[j]) < cfg.distinct_margin) return false;
    return true;
}

// Orbit invariant of a generic pair of boundary pairs: the orientation of
// (x1, x2, y1) and the cross ratio b = [x1, x2, y1, y2].  Four pairwise
// distinct points force b outside {0, 1}.
struct OrbitInvariantGA {
    int sign; // +1 or -1
    double b;
};

inline OrbitInvariantGA orbit_invariant_GA(const PairGA& x, const PairGA& y,
                                           const GenericityConfig& cfg = {}) {
    if (!generic_pair_of_pairs(x, y, cfg))
        fail(ErrorKind::degenerate_configuration,
             "orbit_invariant_GA: points not pairwise distinct within distinct margin");
    const int s = orientation(x.first, x.second, y.first, cfg.distinct_margin);
    const double b = cross_ratio(x.first, x.second, y.first, y.second);
    return OrbitInvariantGA{s, b};
}

} // namespace sl2k
