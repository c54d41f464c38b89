#pragma once

#include <cmath>
#include <string>

#include "sl2k/scalar.hpp"

namespace sl2k {

// Nonzero column vector in K^2.  Construction rejects vectors whose
// squared norm falls below tol::nonzero, so downstream divisions by
// norm_sq are safe.
template <Field K>
struct Vec2 {
    K x{}, y{};

    Vec2(K x_, K y_) : x(x_), y(y_) {
        require_finite(x, "Vec2 component");
        require_finite(y, "Vec2 component");
        if (abs_sq(x) + abs_sq(y) < tol::nonzero)
            fail(ErrorKind::zero_vector, "Vec2 norm below nonzero margin");
    }
};

template <Field K>
double norm_sq(const Vec2<K>& v) {
    return abs_sq(v.x) + abs_sq(v.y);
}

// Hermitian product, linear in the first slot and conjugated in the second.
template <Field K>
K hermitian(const Vec2<K>& u, const Vec2<K>& v) {
    return u.x * conj(v.x) + u.y * conj(v.y);
}

// det(u | v) of the matrix with columns u, v.
template <Field K>
K det_pair(const Vec2<K>& u, const Vec2<K>& v) {
    return u.x * v.y - u.y * v.x;
}

template <Field K>
Vec2<K> scaled(const Vec2<K>& v, K s) {
    return Vec2<K>(v.x * s, v.y * s);
}

template <Field K>
double vec_dist(const Vec2<K>& u, const Vec2<K>& v) {
    return std::sqrt(abs_sq(u.x - v.x) + abs_sq(u.y - v.y));
}

// Element of SL(2,K).  Unimodularity |det - 1| <= tol::det is checked at
// construction, after every product and after inversion.
template <Field K>
struct Mat2 {
    K a11{}, a12{}, a21{}, a22{};

    Mat2(K m11, K m12, K m21, K m22) : a11(m11), a12(m12), a21(m21), a22(m22) {
        require_finite(a11, "Mat2 entry");
        require_finite(a12, "Mat2 entry");
        require_finite(a21, "Mat2 entry");
        require_finite(a22, "Mat2 entry");
        const K d = a11 * a22 - a12 * a21;
        // Scale-aware unimodularity guard: the attainable precision of a
        // computed determinant degrades with the squared entry scale, so
        // the bound grows with it; at unit scale it stays tol::det.
        const double scale = 1.0 + abs_sq(a11) + abs_sq(a12) + abs_sq(a21) + abs_sq(a22);
        if (std::abs(d - K(1)) > tol::det * scale)
            fail(ErrorKind::det_drift, "Mat2 determinant " + std::to_string(re(d)) +
                                           (is_complex_v<K> ? ("+" + std::to_string(im(d)) + "j") : std::string()));
    }

    static Mat2 identity() { return Mat2(K(1), K(0), K(0), K(1)); }

    Mat2 inverse() const { return Mat2(a22, -a12, -a21, a11); }

    Mat2 conj_transpose() const { return Mat2(conj(a11), conj(a21), conj(a12), conj(a22)); }

    K det() const { return a11 * a22 - a12 * a21; }

    Vec2<K> row1() const { return Vec2<K>(a11, a12); }
    Vec2<K> row2() const { return Vec2<K>(a21, a22); }
};

template <Field K>
Mat2<K> operator*(const Mat2<K>& a, const Mat2<K>& b) {
    return Mat2<K>(a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                   a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22);
}

template <Field K>
Vec2<K> operator*(const Mat2<K>& m, const Vec2<K>& v) {
    return Vec2<K>(m.a11 * v.x + m.a12 * v.y, m.a21 * v.x + m.a22 * v.y);
}

template <Field K>
double frob(const Mat2<K>& m) {
    return std::sqrt(abs_sq(m.a11) + abs_sq(m.a12) + abs_sq(m.a21) + abs_sq(m.a22));
}

template <Field K>
double frob_dist(const Mat2<K>& a, const Mat2<K>& b) {
    return std::sqrt(abs_sq(a.a11 - b.a11) + abs_sq(a.a12 - b.a12) + abs_sq(a.a21 - b.a21) +
                     abs_sq(a.a22 - b.a22));
}

// Frobenius distance relative to the scale of the reference matrix.
template <Field K>
double frob_dist_rel(const Mat2<K>& a, const Mat2<K>& ref) {
    return frob_dist(a, ref) / frob(ref);
}

template <Field K>
double unitary_defect(const Mat2<K>& k) {
    return frob_dist(k * k.conj_transpose(), Mat2<K>::identity());
}

} // namespace sl2k
