#ifndef FRACLEG_NUMERICS_HPP
#define FRACLEG_NUMERICS_HPP

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "fracleg/dual.hpp"
#include "fracleg/errors.hpp"

namespace fracleg {

inline constexpr double pi = std::numbers::pi;

// sin(pi x) and cos(pi x) with exact zeros at the integers / half-integers
inline double sinpi(double x) {
  double r = x - 2.0 * std::round(0.5 * x);  // r in [-1, 1]
  double sign = 1.0;
  if (r < 0) { r = -r; sign = -1.0; }
  if (r > 0.5) r = 1.0 - r;
  return sign * std::sin(pi * r);
}

inline double cospi(double x) { return sinpi(x + 0.5); }

namespace detail {

inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// Gamma for x >= 0.5: Lanczos below 15, Stirling series above.
inline double lanczos_gamma(double x) {
  if (x >= 15.0) {
    double r = 1.0 / (x * x);
    double s = (1.0 / 12.0 + r * (-1.0 / 360.0 + r * (1.0 / 1260.0 + r * (-1.0 / 1680.0 +
               r * (1.0 / 1188.0 + r * (-691.0 / 360360.0 + r * (1.0 / 156.0 +
               r * (-3617.0 / 122400.0)))))))) / x;
    double h = std::pow(x, 0.5 * (x - 0.5));
    return std::sqrt(2.0 * pi) * h * (h * std::exp(-x)) * std::exp(s);
  }
  x -= 1.0;
  double a = lanczos_coef[0];
  for (int i = 1; i < 9; ++i) a += lanczos_coef[i] / (x + i);
  double t = x + lanczos_g + 0.5;
  double h = std::pow(t, 0.5 * (x + 0.5));
  return std::sqrt(2.0 * pi) * h * (h * std::exp(-t)) * a;
}

inline bool near_nonpositive_integer(double x, double tol) {
  return x <= tol && std::abs(x - std::round(x)) <= tol;
}

}  // namespace detail

inline double gamma_fn(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma_fn: non-finite argument");
  if (detail::near_nonpositive_integer(x, 1e-12))
    throw PoleError("gamma_fn: pole at x = " + std::to_string(x));
  if (x >= 0.5) return detail::lanczos_gamma(x);
  return pi / (sinpi(x) * detail::lanczos_gamma(1.0 - x));
}

// 1/Gamma(x), entire; exactly zero at the poles of Gamma.
inline double rgamma(double x) {
  if (x >= 0.5) return 1.0 / detail::lanczos_gamma(x);
  if (x <= 0 && x == std::round(x)) return 0.0;
  return sinpi(x) * detail::lanczos_gamma(1.0 - x) / pi;
}

struct EllipticKE {
  double K, E;
};

// K(m) and E(m) by the AGM, given m and mc = 1 - m separately so that a
// modulus near 1 keeps its complement
inline EllipticKE complete_elliptic_ke(double m, double mc) {
  if (!(m >= 0.0) || !(mc >= 0.0)) throw DomainError("complete elliptic integrals: m outside [0,1]");
  if (mc == 0.0) throw DomainError("complete_elliptic_k: m = 1 (logarithmic singularity)");
  double a = 1.0, b = std::sqrt(mc);
  double c = std::sqrt(m);  // c_n = (a_{n-1} - b_{n-1}) / 2
  double sum = 0.5 * m;
  double pow2 = 0.5;
  // c_{n+1} = c_n^2 / (4 a_{n+1}) rather than a - b, which stalls at one ulp
  for (int i = 0; i < 64 && c > 1e-18 * a; ++i) {
    double an = 0.5 * (a + b);
    c = c * c / (4.0 * an);
    b = std::sqrt(a * b);
    a = an;
    pow2 *= 2.0;
    sum += pow2 * c * c;
  }
  return {pi / (2.0 * a), pi / (2.0 * a) * (1.0 - sum)};
}

// Complete elliptic integral of the first kind, parameter m = k^2.
inline double complete_elliptic_k(double m) {
  if (!(m >= 0.0)) throw DomainError("complete_elliptic_k: m < 0");
  if (m >= 1.0 - 1e-12) throw DomainError("complete_elliptic_k: m too close to 1 (logarithmic singularity)");
  return complete_elliptic_ke(m, 1.0 - m).K;
}

// Complete elliptic integral of the second kind, parameter m = k^2.
inline double complete_elliptic_e(double m) {
  if (!(m >= 0.0) || m > 1.0) throw DomainError("complete_elliptic_e: m outside [0,1]");
  if (m == 1.0) return 1.0;
  return complete_elliptic_ke(m, 1.0 - m).E;
}

struct EllipticDerivatives {
  double dK_dm;
  double dE_dm;
};

inline EllipticDerivatives elliptic_derivatives(double m) {
  if (!(m > 0.0 && m < 1.0)) throw DomainError("elliptic_derivatives: need 0 < m < 1");
  double K = complete_elliptic_k(m);
  double E = complete_elliptic_e(m);
  return {(E - (1.0 - m) * K) / (2.0 * m * (1.0 - m)), (E - K) / (2.0 * m)};
}

inline Dual complete_elliptic_k(const Dual& m) {
  if (m.d == 0.0) return {complete_elliptic_k(m.v), 0.0};
  return {complete_elliptic_k(m.v), elliptic_derivatives(m.v).dK_dm * m.d};
}

inline Dual complete_elliptic_e(const Dual& m) {
  if (m.d == 0.0) return {complete_elliptic_e(m.v), 0.0};
  return {complete_elliptic_e(m.v), elliptic_derivatives(m.v).dE_dm * m.d};
}

}  // namespace fracleg

#endif
