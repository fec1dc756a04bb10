#ifndef FRACLEG_CLOSED_FORMS_HPP
#define FRACLEG_CLOSED_FORMS_HPP

#include <cmath>
#include <string>

#include "fracleg/errors.hpp"
#include "fracleg/numerics.hpp"

namespace fracleg {

struct CardanoAux {
  double A = 1;
};

namespace detail {

inline double fourth_root(double v, const char* what) {
  if (!(v >= 0.0)) throw NegativeRadicandError(std::string(what) + ": negative radicand " + std::to_string(v));
  return v == 0.0 ? 0.0 : std::exp(0.25 * std::log(v));
}

// -cosh t + sqrt(sinh 3t / (3 sinh t)) with sinh 3t / (3 sinh t) = 1 + (4/3) sinh^2 t,
// rationalized so nothing cancels near t = 0
inline double hyperbolic_bracket(double t) {
  const double s = std::sinh(t), c = std::cosh(t);
  const double rad = 1.0 + (4.0 / 3.0) * s * s;
  return (s * s / 3.0) / (c + std::sqrt(rad));
}

// cos t - sqrt(sin 3t / (3 sin t)), sin 3t / (3 sin t) = 1 - (4/3) sin^2 t
inline double trig_bracket(double t) {
  const double s = std::sin(t), c = std::cos(t);
  const double rad = 1.0 - (4.0 / 3.0) * s * s;
  if (!(rad >= 0.0)) throw NegativeRadicandError("ferrers closed form: inner radicand negative");
  return (s * s / 3.0) / (c + std::sqrt(rad));
}

inline double three_34_over_gamma54() { return std::pow(3.0, 0.75) / std::tgamma(1.25); }

}  // namespace detail

// P_{-1/6}^{-1/4}(cos theta), ferrers
inline double ferrers_p_m16_m14(double theta) {
  if (!(theta > 0.0 && theta < pi)) throw DomainError("ferrers_p_m16_m14: theta must lie in (0, pi)");
  const double b = detail::trig_bracket(theta / 3.0);
  return detail::three_34_over_gamma54() * std::pow(std::sin(theta), -0.25) *
         detail::fourth_root(b, "ferrers_p_m16_m14");
}

// P_{-1/6}^{-1/4}(cosh xi)
inline double legendre_p_m16_m14(double xi) {
  if (!(xi > 0.0) || !std::isfinite(xi)) throw DomainError("legendre_p_m16_m14: xi must be positive");
  const double b = detail::hyperbolic_bracket(xi / 3.0);
  // (sinh xi)^{-1/4} b^{1/4} overflows separately for large xi
  if (xi > 300.0) {
    const double lb = std::log(b), ls = xi - std::log(2.0) + std::log1p(-std::exp(-2.0 * xi));
    return detail::three_34_over_gamma54() * std::exp(0.25 * (lb - ls));
  }
  return detail::three_34_over_gamma54() * std::pow(std::sinh(xi), -0.25) *
         detail::fourth_root(b, "legendre_p_m16_m14");
}

struct RadicalConstants {
  double gamma_form = 0;    // 3^{3/4} sqrt(pi/2) Gamma(5/12) / Gamma(5/4)
  double radical_form = 0;  // 2^{3/4} 3^{9/8} Gamma(2/3) sqrt(sqrt3 - 1)
};

inline RadicalConstants radical_constants() {
  RadicalConstants c;
  c.gamma_form = std::pow(3.0, 0.75) * std::sqrt(pi / 2.0) * std::tgamma(5.0 / 12.0) / std::tgamma(1.25);
  c.radical_form = std::pow(2.0, 0.75) * std::pow(3.0, 9.0 / 8.0) * std::tgamma(2.0 / 3.0) *
                   std::sqrt(std::sqrt(3.0) - 1.0);
  return c;
}

inline double radical_constant() {
  const auto c = radical_constants();
  if (std::abs(c.gamma_form - c.radical_form) > 1e-12 * std::abs(c.gamma_form))
    throw InternalError("radical_constant: the two forms of C disagree");
  return c.gamma_form;
}

// Qhat_{-1/4}^{-1/3}(coth xi) = C (sinh xi)^{1/4} [...]^{1/4}; Whipple applied to P_{-1/6}^{-1/4}(cosh xi)
// gives the factor sqrt(pi/2) Gamma(5/12) (sinh xi)^{+1/2}
inline double qhat_m14_m13(double xi) {
  if (!(xi > 0.0) || !std::isfinite(xi)) throw DomainError("qhat_m14_m13: xi must be positive");
  const double b = detail::hyperbolic_bracket(xi / 3.0);
  if (xi > 300.0) {
    const double lb = std::log(b), ls = xi - std::log(2.0) + std::log1p(-std::exp(-2.0 * xi));
    return radical_constant() * std::exp(0.25 * (lb + ls));
  }
  return radical_constant() * std::pow(std::sinh(xi), 0.25) * detail::fourth_root(b, "qhat_m14_m13");
}

// Qhat_{-1/4}^{-1/2}(z) = 4 sqrt(pi/2) [(z^2-1)^{-1} (z - sqrt(z^2-1))]^{1/4}
inline double qhat_m14_m12(double z) {
  if (!(z > 1.0) || !std::isfinite(z)) throw DomainError("qhat_m14_m12: z must exceed 1");
  const double w = (z - 1.0) * (z + 1.0);
  const double small = 1.0 / (z + std::sqrt(w));  // z - sqrt(z^2-1)
  return 4.0 * std::sqrt(pi / 2.0) * std::pow(w, -0.25) * std::pow(small, 0.25);
}

inline CardanoAux cardano_aux(double x) {
  if (!(x <= 0.0)) throw DomainError("cardano_aux: x must be <= 0");
  const double u = std::sqrt(-2.0 * x), v = std::sqrt(2.0 - 2.0 * x);
  return {1.0 - 2.0 * x + u * v};  // (u + v)^2 / 2
}

// 2F1(1/6, 5/6; 5/4; x) for x <= 0.  With A = e^xi, t = xi/3:
// -(A^{1/3} + A^{-1/3})/2 = -cosh t, (1 + A^{2/3} + A^{-2/3})/3 = 1 + (4/3) sinh^2 t
inline double octahedral_2f1(double x) {
  if (!(x <= 0.0) || !std::isfinite(x)) throw DomainError("octahedral_2f1: x must be <= 0");
  if (x == 0.0) return 1.0;
  const double u = std::sqrt(-2.0 * x), v = std::sqrt(2.0 - 2.0 * x);
  const double xi = std::log1p(u * v - 2.0 * x);  // ln A, A - 1 = uv - 2x
  const double b = detail::hyperbolic_bracket(xi / 3.0);
  return std::pow(3.0, 0.75) * std::pow(-2.0 * x, -0.25) * detail::fourth_root(b, "octahedral_2f1");
}

}  // namespace fracleg

#endif
