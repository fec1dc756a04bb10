#ifndef FRACLEG_HYPERGEOMETRIC_HPP
#define FRACLEG_HYPERGEOMETRIC_HPP

#include <cmath>
#include <string>

#include "fracleg/errors.hpp"
#include "fracleg/index.hpp"
#include "fracleg/numerics.hpp"

namespace fracleg {

struct HypParams {
  double a = 0, b = 0, c = 1, x = 0;
};

namespace detail {

inline constexpr int series_cap = 100000;

// sum_{k >= k0} t_k with t_{k+1} = t_k (a+k)(b+k) x / ((c+k)(k+1)), in long double
inline long double hyp_series(long double t, double a, double b, double c, double x, long k0) {
  long double sum = t;
  int small = 0;
  long double la = a, lb = b, lc = c, lx = x;
  for (long k = k0; k < k0 + series_cap; ++k) {
    t *= (la + k) * (lb + k) / ((lc + k) * (k + 1)) * lx;
    sum += t;
    if (std::fabs(t) <= 1e-17L * std::fabs(sum) || t == 0.0L) {
      if (++small >= 10) return sum;
    } else {
      small = 0;
    }
  }
  throw ConvergenceError("2F1 series did not converge within 100000 terms");
}

inline void check_argument(const HypParams& p) {
  if (!std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.c) || !std::isfinite(p.x))
    throw DomainError("2F1: non-finite parameter");
  if (p.x >= 1.0) throw DomainError("2F1: argument x >= 1");
  if (p.x > 1.0 - 1e-8 && !(p.c - p.a - p.b > 0))
    throw DomainError("2F1: argument too close to 1 for a divergent boundary value");
}

// polynomial case: a or b a nonpositive integer, no transformation needed
inline bool terminates(double a, double b) {
  auto np = [](double s) { return s <= 0 && s == std::round(s); };
  return np(a) || np(b);
}

// F(a,b;c;x)/Gamma(c), with x already in [-0.5, 1)
inline double regularized_raw(double a, double b, double c, double x) {
  if (near_nonpositive_integer(c, 1e-12)) {
    long n = std::lround(-c);  // c = -n, series starts at k = n+1
    long k0 = n + 1;
    long double t = 1.0L;
    for (long j = 0; j < k0; ++j) t *= (static_cast<long double>(a) + j) * (static_cast<long double>(b) + j) / (j + 1);
    t *= std::pow(static_cast<long double>(x), static_cast<long double>(k0));
    if (t == 0.0L) return 0.0;
    // Gamma(c + k0) = Gamma(1) = 1
    return static_cast<double>(hyp_series(t, a, b, c, x, k0));
  }
  return static_cast<double>(hyp_series(1.0L, a, b, c, x, 0)) * rgamma(c);
}

}  // namespace detail

// Regularized Gauss function F(a,b;c;x)/Gamma(c); finite for every c.
inline double hyp2f1_regularized(const HypParams& p) {
  detail::check_argument(p);
  if (p.x == 0.0) return rgamma(p.c);
  if (p.x < -0.5 && !detail::terminates(p.a, p.b)) {
    // Pfaff: F(a,b;c;x) = (1-x)^{-a} F(a, c-b; c; x/(x-1))
    double y = p.x / (p.x - 1.0);
    return std::pow(1.0 - p.x, -p.a) * detail::regularized_raw(p.a, p.c - p.b, p.c, y);
  }
  return detail::regularized_raw(p.a, p.b, p.c, p.x);
}

inline double gauss_2f1(const HypParams& p) {
  if (detail::near_nonpositive_integer(p.c, 1e-12))
    throw PoleError("2F1: c is zero or a negative integer");
  detail::check_argument(p);
  if (p.x == 0.0) return 1.0;
  if (p.x < -0.5 && !detail::terminates(p.a, p.b)) {
    double y = p.x / (p.x - 1.0);
    return std::pow(1.0 - p.x, -p.a) *
           static_cast<double>(detail::hyp_series(1.0L, p.a, p.c - p.b, p.c, y, 0));
  }
  return static_cast<double>(detail::hyp_series(1.0L, p.a, p.b, p.c, p.x, 0));
}

inline double gauss_2f1(double a, double b, double c, double x) { return gauss_2f1(HypParams{a, b, c, x}); }

struct OracleOptions {
  bool strict = false;  // throw instead of interpolating in the order
};

struct OracleResult {
  double value = 0;
  bool reduced_precision = false;  // interpolated in the order near an integer
};

namespace oracle {

// P_nu^mu(z), z > 1, through 2F1 at (1-z)/2
inline double legendre_p_series(double nu, double mu, double z) {
  double pre = std::pow((z + 1.0) / (z - 1.0), 0.5 * mu);
  return pre * hyp2f1_regularized({-nu, nu + 1.0, 1.0 - mu, 0.5 * (1.0 - z)});
}

// Olver's bold Q_nu^mu(z), z > 1, via the 1/z^2 series
inline double olver_q(double nu, double mu, double z) {
  double pre = std::sqrt(pi) * std::pow(z * z - 1.0, 0.5 * mu) /
               (std::pow(2.0, nu + 1.0) * std::pow(z, nu + mu + 1.0));
  return pre * hyp2f1_regularized({0.5 * (nu + mu + 2.0), 0.5 * (nu + mu + 1.0), nu + 1.5, 1.0 / (z * z)});
}

inline double legendre_p(double nu, double mu, double z) {
  if (z > 3.0) {
    double c = cospi(nu);
    if (std::abs(c) > 0.1) {
      // P^mu_nu = [Q^{-mu}_{-nu-1} / Gamma(nu-mu+1) - Q^{-mu}_nu / Gamma(-mu-nu)] / cos(nu pi)
      double a = olver_q(-nu - 1.0, -mu, z) * rgamma(nu - mu + 1.0);
      double b = olver_q(nu, -mu, z) * rgamma(-mu - nu);
      return (a - b) / c;
    }
  }
  return legendre_p_series(nu, mu, z);
}

// series in (1-x)/2, for x >= -0.5
inline double ferrers_p_series(double nu, double mu, double x) {
  double pre = std::pow((1.0 + x) / (1.0 - x), 0.5 * mu);
  return pre * hyp2f1_regularized({-nu, nu + 1.0, 1.0 - mu, 0.5 * (1.0 - x)});
}

// within this distance of an integer order the two-term formulas are
// replaced by interpolation in the order (everything interpolated is entire in mu)
inline constexpr double order_window = 0.01;

inline bool near_integer_order(double mu) { return std::abs(mu - std::round(mu)) < order_window; }

// degree 7 through mu0 +- {1,2,3,4} h, mu0 the nearest integer
template <class F>
double order_interpolated(F f, double mu) {
  constexpr double h = 2.5e-3;
  const double mu0 = std::round(mu);
  double xs[8], ys[8];
  int n = 0;
  for (int k = 1; k <= 4; ++k)
    for (int s : {-1, 1}) {
      xs[n] = mu0 + s * k * h;
      ys[n] = f(xs[n]);
      ++n;
    }
  // Neville
  for (int j = 1; j < 8; ++j)
    for (int i = 7; i >= j; --i)
      ys[i] = ((mu - xs[i - j]) * ys[i] - (mu - xs[i]) * ys[i - 1]) / (xs[i] - xs[i - j]);
  return ys[7];
}

// Olver's bold Q from P^{+-mu}, for z near 1
inline double olver_q_combination(double nu, double mu, double z) {
  auto g = [&](double m) {
    return pi / (2.0 * sinpi(m)) *
           (legendre_p(nu, m, z) * rgamma(nu + m + 1.0) - legendre_p(nu, -m, z) * rgamma(nu - m + 1.0));
  };
  return near_integer_order(mu) ? order_interpolated(g, mu) : g(mu);
}

// Ferrers Q / Gamma(nu+mu+1), x >= -0.5
inline double ferrers_q_normalized(double nu, double mu, double x) {
  auto g = [&](double m) {
    return pi / (2.0 * sinpi(m)) *
           (cospi(m) * ferrers_p_series(nu, m, x) * rgamma(nu + m + 1.0) -
            ferrers_p_series(nu, -m, x) * rgamma(nu - m + 1.0));
  };
  return near_integer_order(mu) ? order_interpolated(g, mu) : g(mu);
}

// x < -0.5 by reflection, s = nu + mu:
//   P(x) = cos(s pi) P(-x) - (2/pi) sin(s pi) Q(-x),  sin(s pi) Gamma(s+1) = -pi / Gamma(-s)
inline double ferrers_p(double nu, double mu, double x) {
  if (x >= -0.5) return ferrers_p_series(nu, mu, x);
  const double s = nu + mu;
  return cospi(s) * ferrers_p_series(nu, mu, -x) + 2.0 * rgamma(-s) * ferrers_q_normalized(nu, mu, -x);
}

//   Q(x) = -cos(s pi) Q(-x) - (pi/2) sin(s pi) P(-x)
inline double ferrers_q(double nu, double mu, double x) {
  const double s = nu + mu;
  if (x >= -0.5) return gamma_fn(s + 1.0) * ferrers_q_normalized(nu, mu, x);
  return -cospi(s) * gamma_fn(s + 1.0) * ferrers_q_normalized(nu, mu, -x) -
         0.5 * pi * sinpi(s) * ferrers_p_series(nu, mu, -x);
}

inline constexpr double qhat_series_threshold = 1.005;

inline double qhat(double nu, double mu, double z) {
  if (z >= qhat_series_threshold) return gamma_fn(nu + mu + 1.0) * olver_q(nu, mu, z);
  return gamma_fn(nu + mu + 1.0) * olver_q_combination(nu, mu, z);
}

// true when the value above goes through order interpolation
inline bool interpolates(FunctionKind kind, double mu, double point) {
  if (!near_integer_order(mu)) return false;
  switch (kind) {
    case FunctionKind::LegendreP: return false;
    case FunctionKind::LegendreQhat:
    case FunctionKind::LegendrePtilde: return point < qhat_series_threshold;
    case FunctionKind::FerrersP: return point < -0.5;
    case FunctionKind::FerrersPbar: return point > 0.5;
    case FunctionKind::FerrersQ: return true;
  }
  return false;
}

}  // namespace oracle

inline OracleResult oracle_legendre_ex(FunctionKind kind, const LegendreIndex& idx, double point,
                                       const OracleOptions& opt = {}) {
  check_domain(kind, point);
  if (needs_qhat_normalization(kind) && kind != FunctionKind::LegendrePtilde) check_qhat_normalization(idx);
  const double nu = idx.nu, mu = idx.mu;
  OracleResult res;
  if (oracle::interpolates(kind, mu, point)) {
    if (opt.strict) throw UnsupportedIndexError("oracle: order near an integer needs interpolation in the order");
    res.reduced_precision = true;
  }

  switch (kind) {
    case FunctionKind::LegendreP:
      res.value = oracle::legendre_p(nu, mu, point);
      break;
    case FunctionKind::LegendreQhat:
      res.value = oracle::qhat(nu, mu, point);
      break;
    case FunctionKind::FerrersP:
      res.value = oracle::ferrers_p(nu, mu, point);
      break;
    case FunctionKind::FerrersPbar:
      res.value = oracle::ferrers_p(nu, mu, -point);
      break;
    case FunctionKind::FerrersQ:
      res.value = oracle::ferrers_q(nu, mu, point);
      break;
    case FunctionKind::LegendrePtilde: {
      double s = sinpi(nu + mu);
      double v = cospi(nu + mu) * oracle::legendre_p(nu, mu, point);
      if (s != 0.0) {
        check_qhat_normalization(idx);
        v -= (2.0 / pi) * cospi(mu) * s * oracle::qhat(nu, mu, point);
      } else if (nu + mu < 0.0) {
        // sin vanishes against the pole of Gamma(nu+mu+1)
        throw PoleError("legendre-ptilde: nu + mu is a negative integer");
      }
      res.value = v;
      break;
    }
  }
  detail::require_finite(res.value, "oracle_legendre");
  return res;
}

inline double oracle_legendre(FunctionKind kind, const LegendreIndex& idx, double point) {
  return oracle_legendre_ex(kind, idx, point).value;
}

}  // namespace fracleg

#endif
