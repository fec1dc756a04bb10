#ifndef FRACLEG_APPLICATIONS_HPP
#define FRACLEG_APPLICATIONS_HPP

#include <cmath>
#include <cstdlib>
#include <string>

#include "fracleg/errors.hpp"
#include "fracleg/index.hpp"
#include "fracleg/transforms.hpp"

namespace fracleg {

// (1 + x cos phi)^nu = sum_m c_m e^{i m phi}
struct FourierParams {
  double nu = 0;
  int m = 0;
  double x = 0.5;
};

struct CoefficientResult {
  double value = 0;
  EvalMethod method = EvalMethod::Oracle;
  std::string trace;
};

inline constexpr const char* laplace_convention =
    "b_s^(m)(alpha) = (1/pi) int_0^{2pi} cos(m phi) (1 + alpha^2 - 2 alpha cos phi)^{-s} dphi";

namespace detail {

// Gamma(nu+1) / Gamma(nu+m+1) for m >= 0
inline double rising_reciprocal(double nu, int m) {
  double r = 1.0;
  for (int k = 1; k <= m; ++k) {
    const double f = nu + k;
    if (f == 0.0) throw PoleError("fourier coefficient: Gamma(nu+m+1) / Gamma(nu+1) has a zero factor");
    r /= f;
  }
  return r;
}

// c_m = z^{-nu} Gamma(nu+1)/Gamma(nu+m+1) P_nu^m(z), z = 1/sqrt(1-x^2); c_{-m} = c_m
inline CoefficientResult coefficient_at(double nu, int m, double z) {
  const int am = std::abs(m);
  if (!std::isfinite(nu)) throw DomainError("fourier coefficient: nu must be finite");
  const double g = rising_reciprocal(nu, am);
  const Evaluation ev = evaluate(FunctionKind::LegendreP, LegendreIndex(nu, am), z);
  return {std::pow(z, -nu) * g * ev.value, ev.method, ev.trace};
}

}  // namespace detail

inline CoefficientResult fourier_coefficient_ex(const FourierParams& fp) {
  if (!(fp.x > 0.0 && fp.x < 1.0)) throw DomainError("fourier coefficient: x must lie in (0, 1)");
  const double z = 1.0 / std::sqrt((1.0 - fp.x) * (1.0 + fp.x));
  return detail::coefficient_at(fp.nu, fp.m, z);
}

inline double fourier_coefficient(const FourierParams& fp) { return fourier_coefficient_ex(fp).value; }

// (1 + a^2 - 2a cos phi)^{-s} = (1+a^2)^{-s} (1 + x cos phi)^{-s}, x = -2a/(1+a^2) < 0.
// phi -> phi + pi makes x positive and multiplies c_m by (-1)^m; b = 2 c_m.
inline CoefficientResult laplace_coefficient_ex(double s, int m, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("laplace coefficient: alpha must lie in (0, 1)");
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("laplace coefficient: s must be positive");
  if (m < 0) throw DomainError("laplace coefficient: m must be >= 0");
  const double a2 = alpha * alpha;
  const double z = (1.0 + a2) / ((1.0 - alpha) * (1.0 + alpha));  // 1/sqrt(1-x^2)
  auto c = detail::coefficient_at(-s, m, z);
  const double sign = (m % 2) ? -1.0 : 1.0;
  c.value *= 2.0 * sign * std::pow(1.0 + a2, -s);
  return c;
}

inline double laplace_coefficient(double s, int m, double alpha) { return laplace_coefficient_ex(s, m, alpha).value; }

}  // namespace fracleg

#endif
