#pragma once

#include <cmath>

#include "sl2k/iwasawa.hpp"
#include "sl2k/projective.hpp"

namespace sl2k {

// delta(lambda) = [[0, -1/lambda], [lambda, 0]]; sends e1 to lambda e2.
template <Field K>
Mat2<K> delta(K lambda) {
    if (std::abs(lambda) < tol::nonzero)
        fail(ErrorKind::near_zero_parameter, "delta: |lambda| below nonzero margin");
    return Mat2<K>(K(0), K(-1) / lambda, lambda, K(0));
}

// g_{u,v} = [[u1, v1/d], [u2, v2/d]] with d = det(u|v); sends the
// basepoint configuration (e1, d e2) to (u, v).
template <Field K>
Mat2<K> transporter_vectors(const Vec2<K>& u, const Vec2<K>& v,
                            double margin = tol::indep_margin) {
    const K d = det_pair(u, v);
    if (std::abs(d) < margin * std::sqrt(norm_sq(u) * norm_sq(v)))
        fail(ErrorKind::dependent_pair, "transporter_vectors: pair dependent within margin");
    return Mat2<K>(u.x, v.x / d, u.y, v.y / d);
}

// h_v = [[v1, -conj(v2)/||v||^2], [v2, conj(v1)/||v||^2]]; sends e1 to v.
template <Field K>
Mat2<K> transporter_to_GN_point(const Vec2<K>& v) {
    const double n2 = norm_sq(v);
    return Mat2<K>(v.x, -conj(v.y) * K(1.0 / n2), v.y, conj(v.x) * K(1.0 / n2));
}

inline Mat2<double> rotation(double t) {
    return Mat2<double>(std::cos(t), -std::sin(t), std::sin(t), std::cos(t));
}

namespace detail {

// Chart angle used to move points at infinity into the finite chart.
inline constexpr double chart_angle = 0.37;

// Pick the rotation among multiples k * chart_angle, |k| <= 3, under
// which the listed points sit deepest inside the finite chart.  The seven
// candidate pole positions are pairwise separated by chart_angle, so each
// point can crowd at most one candidate's pole and with at most six
// points some candidate keeps every |b| well away from zero.
template <class It>
double best_chart_rotation(It first, It last) {
    double best_t = 0.0, best_score = -1.0;
    for (double t : {0.0, chart_angle, -chart_angle, 2 * chart_angle, -2 * chart_angle,
                     3 * chart_angle, -3 * chart_angle}) {
        const Mat2<double> r = rotation(t);
        double score = 2.0;
        for (It it = first; it != last; ++it)
            score = std::min(score, std::abs(mobius(r, *it).b));
        if (score > best_score) {
            best_score = score;
            best_t = t;
        }
    }
    return best_t;
}

inline Mat2<double> det_normalized(double m11, double m12, double m21, double m22) {
    const double s = 1.0 / std::sqrt(m11 * m22 - m12 * m21);
    return Mat2<double>(m11 * s, m12 * s, m21 * s, m22 * s);
}

// [[x, -y/(y-x)], [1, -1/(y-x)]] in chart coordinates; sends (inf, 0)
// to (x, y).
inline Mat2<double> pair_chart_matrix(double x, double y) {
    const double w = y - x;
    return det_normalized(x, -y / w, 1.0, -1.0 / w);
}

} // namespace detail

// Transporter carrying the basepoint pair (infinity, 0) to (x, y),
// determined up to the stabilizer of the basepoint pair.  Points at or
// near infinity are handled by moving the configuration with a fixed
// chart rotation and conjugating back.
inline Mat2<double> transporter_pair(const ProjPoint& x, const ProjPoint& y,
                                     double margin = tol::distinct_margin) {
    if (proj_dist(x, y) < margin)
        fail(ErrorKind::coincident_points, "transporter_pair: points coincide within margin");
    // Comfortably finite points use the chart matrix directly; only a
    // configuration crowding infinity is moved into the chart by a
    // rotation and conjugated back (a member of the same A-coset).
    if (!x.near_infinity(0.01) && !y.near_infinity(0.01))
        return detail::pair_chart_matrix(x.chart_value(), y.chart_value());
    const ProjPoint pts[2] = {x, y};
    const double t = detail::best_chart_rotation(pts, pts + 2);
    const Mat2<double> r = rotation(t);
    const Mat2<double> m =
        detail::pair_chart_matrix(mobius(r, x).chart_value(), mobius(r, y).chart_value());
    return rotation(-t) * m;
}

struct TripleTransporter {
    Mat2<double> g;
    int orientation; // +1: g(inf,0,1) = (x1,x2,y1); -1: g(inf,0,-1) = (x1,x2,y1)
};

// Transporter carrying (infinity, 0, s) to the finite pairwise distinct
// triple (x1, x2, y1), where the branch s = +/-1 is the triple's
// orientation: c^2 = (y1-x2)/((x2-x1)(y1-x1)) picks the branch by sign.
inline TripleTransporter transporter_triple(const ProjPoint& x1, const ProjPoint& x2,
                                            const ProjPoint& y1,
                                            double distinct = tol::distinct_margin,
                                            double c2_margin = tol::log_guard) {
    for (const ProjPoint& p : {x1, x2, y1})
        if (p.near_infinity(distinct))
            fail(ErrorKind::infinite_coordinate, "transporter_triple: point at infinity");
    const int s = orientation(x1, x2, y1, distinct);
    const double xa = x1.chart_value(), xb = x2.chart_value(), yc = y1.chart_value();
    const double csq = (yc - xb) / ((xb - xa) * (yc - xa));
    if (std::abs(csq) < c2_margin)
        fail(ErrorKind::degenerate_triple, "transporter_triple: both branch coefficients vanish");
    const double c = std::sqrt(std::abs(csq));
    const double w = c * (xb - xa);
    return TripleTransporter{detail::det_normalized(c * xa, -xb / w, c, -1.0 / w), s};
}

} // namespace sl2k
