#ifndef FRACLEG_KERNEL_HPP
#define FRACLEG_KERNEL_HPP

#include <cmath>
#include <cstdlib>
#include <string>

#include "fracleg/dual.hpp"
#include "fracleg/elliptic_combination.hpp"
#include "fracleg/errors.hpp"
#include "fracleg/hypergeometric.hpp"
#include "fracleg/index.hpp"
#include "fracleg/numerics.hpp"

namespace fracleg {

inline constexpr int ladder_budget = 12;
// above this the ladder value has cancelled away more than about four digits
inline constexpr double cancellation_limit = 1e3;

// Evaluation parameter t: xi with z = cosh(xi), or theta with x = cos(theta).
inline double eval_parameter(FunctionKind kind, double point) {
  check_domain(kind, point);
  return is_ferrers(kind) ? std::acos(point) : std::acosh(point);
}

namespace detail {

// half-angle quantities read off the point itself so that 1 - m stays accurate:
// Legendre  th2 = tanh^2(xi/2) = (z-1)/(z+1), sh2 = sech^2(xi/2) = 2/(z+1)
// Ferrers   th2 = sin^2(theta/2) = (1-x)/2,   sh2 = cos^2(theta/2) = (1+x)/2
struct HalfAngle {
  double th2, sh2;
  Dual m;   // th2 as a function of t
  Dual mc;  // sh2 as a function of t
};

inline HalfAngle half_angle(bool ferrers, double point) {
  HalfAngle h;
  if (ferrers) {
    h.th2 = 0.5 * (1.0 - point);
    h.sh2 = 0.5 * (1.0 + point);
  } else {
    h.th2 = (point - 1.0) / (point + 1.0);
    h.sh2 = 2.0 / (point + 1.0);
  }
  // d/dt sin^2(theta/2) = sin(theta/2) cos(theta/2); d/dt tanh^2(xi/2) = tanh(xi/2) sech^2(xi/2)
  const double d = ferrers ? std::sqrt(h.th2 * h.sh2) : std::sqrt(h.th2) * h.sh2;
  h.m = {h.th2, d};
  h.mc = {h.sh2, -d};
  return h;
}

}  // namespace detail

// The classical representations at degree -1/2, order 0, as usually written.  The
// Qhat and FerrersQ forms keep their own moduli, e^{-2 xi} and cos^2(theta/2).
inline EllipticCombination base_half_degree(FunctionKind kind, double point) {
  check_domain(kind, point);
  const auto h = detail::half_angle(is_ferrers(kind), point);
  switch (kind) {
    case FunctionKind::LegendreP: {
      const double sech = std::sqrt(h.sh2), tanh_ = std::sqrt(h.th2);
      return times_K(Dual(2.0 / pi * sech, -1.0 / pi * sech * tanh_), h.m, h.sh2);
    }
    case FunctionKind::LegendreQhat: {
      const double xi = std::acosh(point), q = std::exp(-2.0 * xi);
      return times_K(Dual(2.0 * std::exp(-0.5 * xi), -std::exp(-0.5 * xi)), Dual(q, -2.0 * q), -std::expm1(-2.0 * xi));
    }
    case FunctionKind::FerrersP:
      return times_K(Dual(2.0 / pi), h.m, h.sh2);
    case FunctionKind::FerrersQ:
      return times_K(Dual(1.0), h.mc, h.th2);
    default:
      throw DomainError("base_half_degree: kind must be legendre-p, legendre-qhat, ferrers-p or ferrers-q");
  }
}

// Same functions on one shared modulus per argument so that P and Q combine:
// m0 = tanh^2(xi/2) (Qhat by Landen as sech(xi/2) K(1-m0)), or m0 = sin^2(theta/2).
inline EllipticCombination base_unified(FunctionKind kind, double point) {
  check_domain(kind, point);
  const auto h = detail::half_angle(is_ferrers(kind), point);
  const double sech = std::sqrt(h.sh2), tanh_ = std::sqrt(h.th2);
  switch (kind) {
    case FunctionKind::LegendreP:
      return times_K(Dual(2.0 / pi * sech, -1.0 / pi * sech * tanh_), h.m, h.sh2);
    case FunctionKind::LegendreQhat:
      return times_Kc(Dual(sech, -0.5 * sech * tanh_), h.m, h.sh2);
    case FunctionKind::FerrersP:
      return times_K(Dual(2.0 / pi), h.m, h.sh2);
    case FunctionKind::FerrersQ:
      return times_Kc(Dual(1.0), h.m, h.sh2);
    default:
      throw DomainError("base_unified: kind must be legendre-p, legendre-qhat, ferrers-p or ferrers-q");
  }
}

template <class S>
struct LadderState {
  S value;  // Dual or EllipticCombination; derivative with respect to t
  LegendreIndex idx;
};

namespace detail {

inline Dual apply_map(const Dual& f, double ff, double fd, double df, double dd) {
  return {ff * f.v + fd * f.d, df * f.v + dd * f.d};
}
inline EllipticCombination apply_map(const EllipticCombination& f, double ff, double fd, double df, double dd) {
  return f.mapped(ff, fd, df, dd);
}

struct Geometry {
  bool ferrers;
  double S, C;  // sinh/cosh xi or sin/cos theta
  double cot;   // C / S
  double csc2;  // 1 / S^2
};

inline Geometry geometry(FunctionKind kind, double point) {
  check_domain(kind, point);
  Geometry g;
  g.ferrers = is_ferrers(kind);
  g.S = g.ferrers ? std::sqrt((1.0 - point) * (1.0 + point)) : std::sqrt((point - 1.0) * (point + 1.0));
  g.C = point;
  g.cot = g.C / g.S;
  g.csc2 = 1.0 / (g.S * g.S);
  return g;
}

// u'' = -cot u' + q u
inline double ode_q(const Geometry& g, double nu, double mu) {
  return g.ferrers ? mu * mu * g.csc2 - nu * (nu + 1.0) : nu * (nu + 1.0) + mu * mu * g.csc2;
}

// s in the order recurrence; Pbar picks up -1 from theta -> pi - theta
inline double ladder_sign(FunctionKind kind) {
  switch (kind) {
    case FunctionKind::LegendreP:
    case FunctionKind::FerrersP:
    case FunctionKind::FerrersQ: return 1.0;
    case FunctionKind::LegendreQhat:
    case FunctionKind::FerrersPbar: return -1.0;
    default: throw DomainError("ladders act on legendre-p, legendre-qhat and the Ferrers kinds only");
  }
}

inline double degree_sign(FunctionKind kind) {
  if (kind == FunctionKind::LegendrePtilde) throw DomainError("ladders do not act on legendre-ptilde");
  return kind == FunctionKind::FerrersPbar ? -1.0 : 1.0;
}

inline void check_direction(int direction) {
  if (direction != 1 && direction != -1) throw DomainError("ladder direction must be +1 or -1");
}

}  // namespace detail

// Order ladder: M^{+-} = D_t -+ mu cot t, with
//   Legendre: M^{+-} F = s C^{+-} F^{mu+-1},  Ferrers: M^{+-} F = +-C^{+-} F^{mu+-1}.
template <class S>
LadderState<S> ladder_order(FunctionKind kind, const LadderState<S>& st, int direction, double point) {
  detail::check_direction(direction);
  const auto g = detail::geometry(kind, point);
  const double nu = st.idx.nu, mu = st.idx.mu;
  double scale = detail::ladder_sign(kind);
  if (g.ferrers) scale *= direction;
  if (direction < 0) {
    double cm = (nu + 0.5) * (nu + 0.5) - (mu - 0.5) * (mu - 0.5);
    if (std::abs(cm) <= 1e-12) throw SingularLadderError("order ladder: C- vanishes");
    scale /= cm;
  }
  // G = scale (F' + k cot F),  G' = scale [(k-1) cot F' + (q - k csc^2) F]
  const double k = -direction * mu;
  const double q = detail::ode_q(g, nu, mu);
  LadderState<S> out{detail::apply_map(st.value, scale * k * g.cot, scale, scale * (q - k * g.csc2),
                                       scale * (k - 1.0) * g.cot),
                     LegendreIndex(nu, mu + direction)};
  return out;
}

// Degree ladder: M_{+-} = -S D_t - [1/2 +- (nu+1/2)] C, M_{+-} F_nu = [-+(nu+1/2) + (mu-1/2)] F_{nu+-1}.
template <class S>
LadderState<S> ladder_degree(FunctionKind kind, const LadderState<S>& st, int direction, double point) {
  detail::check_direction(direction);
  const auto g = detail::geometry(kind, point);
  const double nu = st.idx.nu, mu = st.idx.mu;
  const double sign = detail::degree_sign(kind);
  double bracket = -direction * (nu + 0.5) + (mu - 0.5);
  if (std::abs(bracket) <= 1e-12) throw SingularLadderError("degree ladder: bracket constant vanishes");
  const double h = 0.5 + direction * (nu + 0.5);
  const double q = detail::ode_q(g, nu, mu);
  const double w = sign / bracket;
  // G = w (-S F' - h C F);  G' = w (-S (q +- h) F - h C F'), + for Legendre, - for Ferrers
  const double qh = g.ferrers ? q - h : q + h;
  LadderState<S> out{detail::apply_map(st.value, -w * h * g.C, -w * g.S, -w * g.S * qh, -w * h * g.C),
                     LegendreIndex(nu + direction, mu)};
  return out;
}

inline bool is_half_odd(double nu) {
  double f = nu + 0.5;
  return std::abs(f - std::round(f)) <= 1e-12;
}

// Half-odd degree, integer order: base case plus order then degree ladders.
inline EllipticCombination eval_classical(FunctionKind kind, const LegendreIndex& idx, double point) {
  check_domain(kind, point);
  if (!is_half_odd(idx.nu) || !idx.m)
    throw UnsupportedIndexError("eval_classical needs a half-odd-integer degree and an integer order");
  const int m = *idx.m;
  const int dn = static_cast<int>(std::lround(idx.nu + 0.5));
  if (std::abs(dn) > ladder_budget || std::abs(m) > ladder_budget)
    throw StabilityError("eval_classical: index shifts exceed the ladder budget of 12");
  if (needs_qhat_normalization(kind)) check_qhat_normalization(idx);

  if (kind == FunctionKind::FerrersPbar)
    return eval_classical(FunctionKind::FerrersP, idx, -point).reparametrized(-1.0);
  if (kind == FunctionKind::LegendrePtilde) {
    double s = sinpi(idx.nu + idx.mu);
    return eval_classical(FunctionKind::LegendreP, idx, point) * cospi(idx.nu + idx.mu) -
           eval_classical(FunctionKind::LegendreQhat, idx, point) * ((2.0 / pi) * cospi(idx.mu) * s);
  }

  LadderState<EllipticCombination> st{base_unified(kind, point), LegendreIndex(-0.5, 0.0)};
  for (int i = 0; i < std::abs(m); ++i) st = ladder_order(kind, st, m > 0 ? 1 : -1, point);
  for (int i = 0; i < std::abs(dn); ++i) st = ladder_degree(kind, st, dn > 0 ? 1 : -1, point);
  return st.value;
}

inline double eval_classical_value(FunctionKind kind, const LegendreIndex& idx, double point) {
  return detail::require_finite(eval_classical(kind, idx, point).value().v, "eval_classical");
}

namespace detail {

// kernel when the index is classical, oracle otherwise
inline double reference_value(FunctionKind kind, const LegendreIndex& idx, double point) {
  if (is_half_odd(idx.nu) && idx.m && std::abs(idx.nu + 0.5) <= ladder_budget && std::abs(*idx.m) <= ladder_budget) {
    auto c = eval_classical(kind, idx, point);
    EllipticBasis b = c.basis();
    if (c.condition(b) <= cancellation_limit) return require_finite(c.value(b).v, "eval_classical");
  }
  return oracle_legendre(kind, idx, point);
}

}  // namespace detail

struct BarPRoutes {
  double reflection;   // P(-x)
  double combination;  // cos[(nu+mu)pi] P(x) - (2/pi) sin[(nu+mu)pi] Q(x)
};

inline BarPRoutes aux_barp_routes(const LegendreIndex& idx, double point) {
  check_domain(FunctionKind::FerrersP, point);
  BarPRoutes r;
  r.reflection = detail::reference_value(FunctionKind::FerrersP, idx, -point);
  double s = sinpi(idx.nu + idx.mu);
  r.combination = cospi(idx.nu + idx.mu) * detail::reference_value(FunctionKind::FerrersP, idx, point);
  if (s != 0.0) r.combination -= (2.0 / pi) * s * detail::reference_value(FunctionKind::FerrersQ, idx, point);
  return r;
}

inline double aux_barp(const LegendreIndex& idx, double point) {
  check_domain(FunctionKind::FerrersP, point);
  return detail::reference_value(FunctionKind::FerrersP, idx, -point);
}

inline double aux_tildep(const LegendreIndex& idx, double point) {
  check_domain(FunctionKind::LegendreP, point);
  double s = sinpi(idx.nu + idx.mu);
  double v = cospi(idx.nu + idx.mu) * detail::reference_value(FunctionKind::LegendreP, idx, point);
  if (s != 0.0) {
    check_qhat_normalization(idx);
    v -= (2.0 / pi) * cospi(idx.mu) * s * detail::reference_value(FunctionKind::LegendreQhat, idx, point);
  }
  return v;
}

// F_{-nu-1} = same * F_nu + other * G, where G is P_nu^{-mu} (Legendre) or P_nu^mu (Ferrers):
//   Qhat_{-nu-1} - Qhat_nu = cos(nu pi) Gamma(nu+mu+1) Gamma(mu-nu) P_nu^{-mu}
//   sin[(nu-mu)pi] Q_{-nu-1} - sin[(nu+mu)pi] Q_nu = -pi cos(nu pi) cos(mu pi) P_nu^mu
struct ReflectionCoefficients {
  double same = 0, other = 0;
};

inline ReflectionCoefficients reflection_coefficients(FunctionKind kind, const LegendreIndex& idx) {
  const double nu = idx.nu, mu = idx.mu;
  check_qhat_normalization(idx);
  check_qhat_normalization(LegendreIndex(-nu - 1.0, mu));
  if (kind == FunctionKind::LegendreQhat) {
    double c = cospi(nu);
    if (c == 0.0) return {1.0, 0.0};
    return {1.0, c * gamma_fn(nu + mu + 1.0) * gamma_fn(mu - nu)};
  }
  if (kind == FunctionKind::FerrersQ) {
    double d = sinpi(nu - mu);
    if (std::abs(d) <= 1e-12) throw DegenerateReflectionError("Ferrers degree reflection: sin[(nu-mu)pi] vanishes");
    return {sinpi(nu + mu) / d, -pi * cospi(nu) * cospi(mu) / d};
  }
  throw DomainError("reflect_degree applies to legendre-qhat and ferrers-q");
}

// value of the kind at degree -nu-1, built from degree nu
inline double reflect_degree(FunctionKind kind, const LegendreIndex& idx, double point) {
  check_domain(kind, point);
  auto c = reflection_coefficients(kind, idx);
  double v = c.same * detail::reference_value(kind, idx, point);
  if (c.other != 0.0) {
    if (kind == FunctionKind::LegendreQhat)
      v += c.other * detail::reference_value(FunctionKind::LegendreP, LegendreIndex(idx.nu, -idx.mu), point);
    else
      v += c.other * detail::reference_value(FunctionKind::FerrersP, idx, point);
  }
  return detail::require_finite(v, "reflect_degree");
}

}  // namespace fracleg

#endif
