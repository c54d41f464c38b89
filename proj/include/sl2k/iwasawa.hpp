#pragma once

#include <cmath>

#include "sl2k/mat2.hpp"

namespace sl2k {

// NAK factorization g = n(x) a(lambda) k with n upper unipotent, a the
// positive diagonal torus element diag(lambda, 1/lambda), and k unitary.
// The A part is carried as log(lambda); k is unitary within tol::recon.
template <Field K>
struct IwasawaNAK {
    K n;               // off-diagonal entry of the unipotent factor
    double log_lambda; // log of the positive diagonal entry
    Mat2<K> k;
};

template <Field K>
Mat2<K> unipotent(K x) {
    return Mat2<K>(K(1), x, K(0), K(1));
}

template <Field K>
Mat2<K> torus(double log_lambda) {
    const double l = std::exp(log_lambda);
    return Mat2<K>(K(l), K(0), K(0), K(1.0 / l));
}

template <Field K>
Mat2<K> reconstruct(const IwasawaNAK<K>& f) {
    return unipotent(f.n) * torus<K>(f.log_lambda) * f.k;
}

// Factor g through the positive Hermitian square s = g g^*: since k is
// unitary, s = n (a a^*) n^* and the entries of s expose n and lambda as
// n = s12/s22, lambda = s22^{-1/2}.  The unitary part is recovered as
// a^{-1} n^{-1} g and checked, as is the reconstruction itself.
template <Field K>
IwasawaNAK<K> iwasawa(const Mat2<K>& g) {
    const double s22 = abs_sq(g.a21) + abs_sq(g.a22);
    if (s22 < tol::nonzero)
        fail(ErrorKind::degenerate, "iwasawa: second row norm below nonzero margin");
    const K s12 = g.a11 * conj(g.a21) + g.a12 * conj(g.a22);
    const K n = s12 * K(1.0 / s22);
    const double log_lambda = -0.5 * std::log(s22);

    const Mat2<K> k = torus<K>(-log_lambda) * unipotent(-n) * g;
    if (unitary_defect(k) > tol::recon * frob(k))
        fail(ErrorKind::degenerate, "iwasawa: unitary factor defect above tolerance");

    IwasawaNAK<K> f{n, log_lambda, k};
    if (frob_dist_rel(reconstruct(f), g) > tol::recon)
        fail(ErrorKind::degenerate, "iwasawa: reconstruction residual above tolerance");
    return f;
}

// Image of g in the unipotent direction, N \ G read off at the identity
// coset: project_N(g) = <row1(g), row2(g)> / ||row2(g)||^2.  Left
// multiplication by n(x) shifts the value by x.
template <Field K>
K project_N(const Mat2<K>& g) {
    const double s22 = abs_sq(g.a21) + abs_sq(g.a22);
    if (s22 < tol::nonzero)
        fail(ErrorKind::degenerate, "project_N: second row norm below nonzero margin");
    return (g.a11 * conj(g.a21) + g.a12 * conj(g.a22)) * K(1.0 / s22);
}

// Log of the positive diagonal part: -1/2 log(a21^2 + a22^2).  Left
// multiplication by a(mu) shifts the value by log(mu).  Real field only.
template <RealField K>
double project_A(const Mat2<K>& g) {
    const double s22 = g.a21 * g.a21 + g.a22 * g.a22;
    if (s22 < tol::nonzero)
        fail(ErrorKind::degenerate, "project_A: second row norm below nonzero margin");
    return -0.5 * std::log(s22);
}

} // namespace sl2k
