#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

#include "sl2k/errors.hpp"

namespace sl2k {

// The two coefficient fields.  Everything templated on K accepts exactly
// these; real-only operations are constrained with RealField.
using real = double;
using cplx = std::complex<double>;

template <class K>
inline constexpr bool is_field_v = std::is_same_v<K, real> || std::is_same_v<K, cplx>;

template <class K>
concept Field = is_field_v<K>;

template <class K>
concept RealField = std::is_same_v<K, real>;

template <class K>
inline constexpr bool is_complex_v = std::is_same_v<K, cplx>;

template <Field K>
inline const char* field_name() {
    return is_complex_v<K> ? "complex" : "real";
}

inline double re(real x) { return x; }
inline double re(const cplx& z) { return z.real(); }
inline double im(real) { return 0.0; }
inline double im(const cplx& z) { return z.imag(); }

inline real conj(real x) { return x; }
inline cplx conj(const cplx& z) { return std::conj(z); }

inline double abs_sq(real x) { return x * x; }
inline double abs_sq(const cplx& z) { return z.real() * z.real() + z.imag() * z.imag(); }

inline bool finite(real x) { return std::isfinite(x); }
inline bool finite(const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

template <Field K>
void require_finite(const K& x, const char* where) {
    if (!finite(x)) fail(ErrorKind::nonfinite, where);
}

// Fixed numeric policy.  All tolerances are absolute unless a caller
// documents otherwise; margins bound how close inputs may come to the
// measure-zero sets excluded by the constructions.
namespace tol {
inline constexpr double det = 1e-9;           // |det - 1| bound for group elements
inline constexpr double recon = 1e-10;        // decomposition reconstruction, Frobenius-relative
inline constexpr double nonzero = 1e-8;       // squared-norm lower bound for vectors
inline constexpr double identity = 1e-8;      // generic identity residual in property checks
inline constexpr double indep_margin = 1e-6;  // relative projective independence of vector pairs
inline constexpr double distinct_margin = 1e-6; // projective distance between boundary points
inline constexpr double log_guard = 1e-12;    // strict positivity floor for log arguments
} // namespace tol

} // namespace sl2k
