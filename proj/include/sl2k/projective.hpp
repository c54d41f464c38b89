#pragma once

#include <algorithm>
#include <cmath>

#include "sl2k/mat2.hpp"

namespace sl2k {

// Point of the real projective line in normalized homogeneous
// coordinates: a^2 + b^2 = 1 and the first nonzero coordinate positive.
// Infinity is [1 : 0]; a finite chart value x is [x : 1] normalized.
struct ProjPoint {
    double a, b;

    ProjPoint(double a_, double b_) : a(a_), b(b_) {
        if (!std::isfinite(a) || !std::isfinite(b))
            fail(ErrorKind::nonfinite, "ProjPoint coordinate");
        const double n2 = a * a + b * b;
        if (n2 < tol::nonzero) fail(ErrorKind::zero_vector, "ProjPoint coordinates near (0,0)");
        const double r = std::sqrt(n2);
        a /= r;
        b /= r;
        const double lead = (a != 0.0) ? a : b;
        if (lead < 0.0) {
            a = -a;
            b = -b;
        }
    }

    static ProjPoint infinity() { return ProjPoint(1.0, 0.0); }
    static ProjPoint chart(double x) { return ProjPoint(x, 1.0); }

    bool near_infinity(double margin) const { return std::abs(b) < margin; }

    // Chart value a/b; rejects points at or numerically at infinity.
    double chart_value(double margin = tol::log_guard) const {
        if (near_infinity(margin))
            fail(ErrorKind::infinite_coordinate, "chart value of a point at infinity");
        return a / b;
    }
};

// |det| of the two homogeneous coordinate pairs; 0 iff the points agree.
inline double proj_dist(const ProjPoint& p, const ProjPoint& q) {
    return std::abs(p.a * q.b - p.b * q.a);
}

// Signed det; individual signs depend on the normalized representatives,
// but any expression where each point appears an even number of times
// (or once in a numerator and once in a denominator) is well defined.
inline double proj_det(const ProjPoint& p, const ProjPoint& q) {
    return p.a * q.b - p.b * q.a;
}

template <RealField K = real>
ProjPoint mobius(const Mat2<K>& g, const ProjPoint& p) {
    return ProjPoint(g.a11 * p.a + g.a12 * p.b, g.a21 * p.a + g.a22 * p.b);
}

// Cross ratio normalized so that (infinity, 0, 1, b) evaluates to b.
// Determinant form, so points at infinity need no special case.
inline double cross_ratio(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& p2,
                          const ProjPoint& p3) {
    const double d02 = proj_det(p0, p2);
    const double d13 = proj_det(p1, p3);
    const double d12 = proj_det(p1, p2);
    const double d03 = proj_det(p0, p3);
    if (std::abs(d12) < tol::log_guard || std::abs(d03) < tol::log_guard)
        fail(ErrorKind::coincident_points, "cross_ratio: denominator pair coincides");
    return (d02 * d13) / (d12 * d03);
}

// Orientation of a pairwise distinct triple: the sign of the square of
// the triple transporter coefficient, (y1-x2)/((x2-x1)(y1-x1)) in the
// finite chart.  Evaluated through homogeneous determinants, where the
// chart expression reduces to det(y1,x2) / (det(x2,x1) det(y1,x1)) times
// a nonnegative factor, so points at infinity are handled and the result
// is invariant under the group action.
inline int orientation(const ProjPoint& x1, const ProjPoint& x2, const ProjPoint& y1,
                       double margin = tol::distinct_margin) {
    if (proj_dist(x1, x2) < margin || proj_dist(x1, y1) < margin || proj_dist(x2, y1) < margin)
        fail(ErrorKind::degenerate_triple, "orientation: triple not pairwise distinct");
    const double v = proj_det(y1, x2) * proj_det(x2, x1) * proj_det(y1, x1);
    return v > 0.0 ? 1 : -1;
}

// Ordered pair of distinct boundary points, the configuration on which
// the A-case cochains are evaluated.
struct PairGA {
    ProjPoint first, second;

    PairGA(ProjPoint p, ProjPoint q, double margin = tol::distinct_margin)
        : first(p), second(q) {
        if (proj_dist(first, second) < margin)
            fail(ErrorKind::coincident_points, "PairGA: points coincide within margin");
    }
};

template <RealField K = real>
PairGA pair_image(const Mat2<K>& g, const PairGA& p, double margin = tol::log_guard) {
    return PairGA(mobius(g, p.first), mobius(g, p.second), margin);
}

} // namespace sl2k
