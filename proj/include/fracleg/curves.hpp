#ifndef FRACLEG_CURVES_HPP
#define FRACLEG_CURVES_HPP

#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/math/tools/roots.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "fracleg/dual.hpp"
#include "fracleg/errors.hpp"
#include "fracleg/numerics.hpp"

namespace fracleg {

enum class CurveId { C3, C3p, C4, C4p, C6, C6p, M, W2, W4, X };

inline constexpr std::array<CurveId, 10> all_curves = {CurveId::C3, CurveId::C3p, CurveId::C4, CurveId::C4p,
                                                      CurveId::C6, CurveId::C6p, CurveId::M,  CurveId::W2,
                                                      CurveId::W4, CurveId::X};

inline std::string_view curve_name(CurveId id) {
  switch (id) {
    case CurveId::C3: return "C3";
    case CurveId::C3p: return "C3p";
    case CurveId::C4: return "C4";
    case CurveId::C4p: return "C4p";
    case CurveId::C6: return "C6";
    case CurveId::C6p: return "C6p";
    case CurveId::M: return "M";
    case CurveId::W2: return "W2";
    case CurveId::W4: return "W4";
    case CurveId::X: return "X";
  }
  return "?";
}

inline std::optional<CurveId> parse_curve(std::string_view s) {
  for (auto id : all_curves)
    if (curve_name(id) == s) return id;
  return std::nullopt;
}

struct CurvePoint {
  Dual L, R, A;  // derivatives with respect to p
};

namespace detail {

inline double value_of(const Dual& x) { return x.v; }
template <class T>
double value_of(const T& x) {
  return static_cast<double>(x);
}

template <class T>
T checked_div(const T& a, const T& b) {
  if (value_of(b) == 0.0) throw DomainError("curve parameter at a singular point");
  return a / b;
}

template <class T>
T checked_sqrt(const T& x) {
  if (!(value_of(x) > 0.0)) throw DomainError("curve parameter outside the range where the prefactor is real");
  using std::sqrt;
  return sqrt(x);
}

template <class T>
struct CurveValues {
  T L, R, A;
};

// L, R and (with_A) A in any scalar with field operations and sqrt
template <class T>
CurveValues<T> curve_formula(CurveId id, const T& p, bool with_A) {
  const T one(1.0), p2 = p * p;
  CurveValues<T> c{one, one, one};
  auto sq = [&](const T& x) { return with_A ? checked_sqrt(x) : one; };
  auto cube = [](const T& x) { return x * x * x; };
  auto L6 = [&] { return one - checked_div(T(54.0) * (p2 - 1.0), cube(p2 - 3.0)); };
  auto L6p = [&] { return one - checked_div(T(54.0) * (p2 - 1.0) * (p2 - 1.0), cube(p2 + 3.0)); };
  auto R3 = [&] { return one - checked_div((p - 1.0) * cube(p + 3.0), T(8.0) * p2 * p); };
  switch (id) {
    case CurveId::C4:
      c.L = T(2.0) * p2 - 1.0;
      c.R = checked_div(one, p);
      c.A = sq(checked_div(one, p));
      break;
    case CurveId::C4p:
      c.L = T(-1.0) + checked_div(T(8.0) * p, (p + 1.0) * (p + 1.0));
      c.R = T(-1.0) + checked_div(T(2.0), p);
      c.A = sq(checked_div(p + 1.0, T(2.0) * p));
      break;
    case CurveId::C6:
      c.L = L6();
      c.R = checked_div(p2 + 3.0, T(4.0) * p);
      c.A = sq(checked_div(T(3.0) - p2, T(2.0) * p));
      break;
    case CurveId::C6p:
      c.L = L6p();
      c.R = checked_div(T(3.0) - p2, T(2.0) * p);
      c.A = sq(checked_div(p2 + 3.0, T(4.0) * p));
      break;
    case CurveId::C3:
      c.L = L6();
      c.R = R3();
      c.A = sq(checked_div((T(3.0) - p2) * (T(3.0) - p2), T(4.0) * p2 * p));
      break;
    case CurveId::C3p:
      c.L = L6p();
      c.R = R3();
      c.A = sq(checked_div((p2 + 3.0) * (p2 + 3.0), T(16.0) * p2 * p));
      break;
    case CurveId::M:
      c.L = T(2.0) * p - 1.0;
      c.R = T(-1.0) + checked_div(T(2.0), p);
      c.A = sq(checked_div(one, p));
      break;
    case CurveId::W2:
      c.L = checked_div(p2 + 1.0, T(2.0) * p);
      c.R = checked_div(p2 + 1.0, p2 - 1.0);
      c.A = sq(checked_div(T(2.0) * p, p2 - 1.0));
      break;
    case CurveId::W4:
      c.L = checked_div(p2 * p2 + T(6.0) * p2 + 1.0, T(4.0) * p * (p2 + 1.0));
      c.R = checked_div(p2 * p2 + 1.0, p2 * p2 - 1.0);
      c.A = sq(checked_div(T(2.0) * p, p2 - 1.0));
      break;
    case CurveId::X: {
      const T q = T(1.0) + T(11.0) * p - p2, s = p + 2.0;
      c.L = checked_div(one - p2, one + p2);
      c.R = one - checked_div(T(2.0) * p * s * s * s * s * s, (one + p2) * q * q);
      c.A = sq(checked_div(s * (one - T(2.0) * p), T(2.0) * q));
      break;
    }
  }
  return c;
}

inline CurvePoint curve_eval(CurveId id, double pv, bool with_A) {
  if (!std::isfinite(pv)) throw DomainError("curve parameter must be finite");
  auto v = curve_formula(id, Dual::variable(pv), with_A);
  return {v.L, v.R, v.A};
}

}  // namespace detail

inline CurvePoint curve_point(CurveId id, double p) { return detail::curve_eval(id, p, true); }

// A point of the curve whose L, R and A are the doubles nearest to exact
// values at one parameter p.  Rounding L or R separately near +-1 loses the
// small distance 1 -+ x that the functions depend on, so p is moved (by
// about one ulp of the more exposed argument) until that argument is
// exactly representable, and the rest is evaluated there in 50 digits.
struct SnappedPoint {
  double p, L, R, A;
};

namespace detail {

// distance of x from the nearest singular point of its function
inline double exposure(double x, bool ferrers) {
  double d = ferrers ? std::min(1.0 - x, 1.0 + x) : x - 1.0;
  return std::abs(x) * std::numeric_limits<double>::epsilon() / d;
}

// one ulp inside the domain when rounding lands on its edge
inline double inside(double x, bool ferrers) {
  if (ferrers && x >= 1.0) return std::nextafter(1.0, 0.0);
  if (ferrers && x <= -1.0) return std::nextafter(-1.0, 0.0);
  if (!ferrers && x <= 1.0) return std::nextafter(1.0, 2.0);
  return x;
}

}  // namespace detail

inline SnappedPoint snap_point(CurveId id, double p, bool left_ferrers, bool right_ferrers) {
  using big = boost::multiprecision::cpp_bin_float_50;
  auto at = [&](const big& q) { return detail::curve_formula(id, q, true); };
  auto first = at(big(p));
  const double L0 = static_cast<double>(first.L), R0 = static_cast<double>(first.R);
  const bool use_left = detail::exposure(L0, left_ferrers) >= detail::exposure(R0, right_ferrers);
  const double target = use_left ? detail::inside(L0, left_ferrers) : detail::inside(R0, right_ferrers);
  auto side = [&](const big& q) { auto c = detail::curve_formula(id, q, false); return use_left ? c.L : c.R; };
  big q(p);
  const big h = big(std::abs(p) + 1.0) * big("1e-25");
  for (int i = 0; i < 20; ++i) {
    big f = side(q) - big(target);
    if (f == 0) break;
    big df = (side(q + h) - side(q - h)) / (2 * h);
    big step = f / df;
    q -= step;
    if (abs(step) <= abs(q) * big("1e-40")) break;
  }
  auto c = at(q);
  SnappedPoint out{static_cast<double>(q), static_cast<double>(c.L), static_cast<double>(c.R),
                   static_cast<double>(c.A)};
  (use_left ? out.L : out.R) = target;
  return out;
}

// L and R only, defined wherever the denominators are nonzero
inline std::pair<double, double> curve_lr(CurveId id, double p) {
  auto c = detail::curve_eval(id, p, false);
  return {c.L.v, c.R.v};
}

namespace detail {

// value together with the sum of absolute monomials, for scaled residuals
struct Mag {
  double v = 0, s = 0;
  Mag(double x) : v(x), s(std::abs(x)) {}
  Mag(double x, double sc) : v(x), s(sc) {}
};
inline Mag operator+(Mag a, Mag b) { return {a.v + b.v, a.s + b.s}; }
inline Mag operator-(Mag a, Mag b) { return {a.v - b.v, a.s + b.s}; }
inline Mag operator*(Mag a, Mag b) { return {a.v * b.v, a.s * b.s}; }
inline Mag cube(Mag a) { return a * a * a; }

inline Mag implicit_poly(CurveId id, Mag L, Mag R) {
  const Mag one = 1.0;
  switch (id) {
    case CurveId::C4: return L * R * R + (R * R - 2.0);
    case CurveId::C4p: return (L - one) * (R + 3.0) * (R + 3.0) + Mag(2.0) * (R - one) * (R - one);
    case CurveId::C6: return (L * L - one) * cube(Mag(4.0) * R * R - 3.0) + Mag(27.0) * (R * R - one);
    case CurveId::C6p: return (L * L - one) * cube(R * R + 3.0) + Mag(27.0) * (R * R - one) * (R * R - one);
    case CurveId::C3:
      return Mag(27.0) * cube(Mag(4.0) * L - 5.0) * (R * R - one) -
             Mag(4.0) * (L - one) * cube(L + one) * cube(Mag(4.0) * R * R - 3.0);
    case CurveId::C3p:
      return Mag(27.0) * cube(Mag(4.0) * L - 5.0) * (R * R - one) * (R * R - one) -
             Mag(4.0) * (L - one) * cube(L + one) * cube(R * R + 3.0);
    case CurveId::M: return (L + one) * (R + one) - 4.0;
    case CurveId::W2: return (L * L - one) * (R * R - one) - one;
    case CurveId::W4:
      return Mag(16.0) * (L * L - one) * (R * R - one) * (Mag(4.0) * L * L + Mag(4.0) * R * R - 5.0) - one;
    case CurveId::X: break;
  }
  throw UnsupportedCurveError("curve X has no implicit polynomial; use its parametrization");
}

}  // namespace detail

inline double implicit_residual(CurveId id, double L, double R) { return detail::implicit_poly(id, L, R).v; }

// |residual| divided by the sum of the absolute monomials
inline double implicit_residual_scaled(CurveId id, double L, double R) {
  auto m = detail::implicit_poly(id, L, R);
  return m.s > 0 ? std::abs(m.v) / m.s : std::abs(m.v);
}

inline bool has_implicit(CurveId id) { return id != CurveId::X; }

// A p-homography together with its action on (L, R).
struct CurveSymmetry {
  const char* p_map;
  const char* action;
  double (*map)(double);
  std::pair<double, double> (*act)(double, double);
};

inline std::vector<CurveSymmetry> curve_symmetries(CurveId id) {
  using P = std::pair<double, double>;
  const CurveSymmetry neg_p_R{"p -> -p", "R -> -R", [](double p) { return -p; },
                              [](double L, double R) { return P{L, -R}; }};
  switch (id) {
    case CurveId::C4: return {neg_p_R};
    case CurveId::C4p:
      return {{"p -> 1/p", "R -> 4/(R+1) - 1", [](double p) { return 1.0 / p; },
               [](double L, double R) { return P{L, 4.0 / (R + 1.0) - 1.0}; }}};
    case CurveId::C6:
      return {{"p -> 3/p", "L -> -L", [](double p) { return 3.0 / p; }, [](double L, double R) { return P{-L, R}; }},
              neg_p_R};
    case CurveId::C6p:
      return {{"p -> -3/p", "L -> -L", [](double p) { return -3.0 / p; }, [](double L, double R) { return P{-L, R}; }},
              neg_p_R};
    case CurveId::C3:
    case CurveId::C3p: return {neg_p_R};
    case CurveId::M:
      return {{"p -> 1/p", "L <-> R", [](double p) { return 1.0 / p; }, [](double L, double R) { return P{R, L}; }}};
    case CurveId::W2:
    case CurveId::W4:
      return {{"p -> (p+1)/(p-1)", "L <-> R", [](double p) { return (p + 1.0) / (p - 1.0); },
               [](double L, double R) { return P{R, L}; }},
              {"p -> 1/p", "R -> -R", [](double p) { return 1.0 / p; }, [](double L, double R) { return P{L, -R}; }},
              {"p -> -p", "L -> -L", [](double p) { return -p; }, [](double L, double R) { return P{-L, R}; }}};
    case CurveId::X:
      return {{"p -> -1/p", "(L, R) -> (-L, -R)", [](double p) { return -1.0 / p; },
               [](double L, double R) { return P{-L, -R}; }}};
  }
  return {};
}

// One column of a breakpoint table: one-sided limits of L and R at p.
// A turning value (local extremum of the map) is flagged.
struct Breakpoint {
  double p;
  double L_below, L_above;
  double R_below, R_above;
  bool L_turning = false, R_turning = false;
};

namespace detail {
inline constexpr double inf = std::numeric_limits<double>::infinity();
inline Breakpoint bp(double p, double L, double R, bool Lt = false, bool Rt = false) {
  return {p, L, L, R, R, Lt, Rt};
}
inline Breakpoint bp2(double p, double Lb, double La, double Rb, double Ra, bool Lt = false, bool Rt = false) {
  return {p, Lb, La, Rb, Ra, Lt, Rt};
}
}  // namespace detail

inline std::vector<Breakpoint> breakpoint_table(CurveId id) {
  using detail::bp;
  using detail::bp2;
  using detail::inf;
  const double s3 = std::sqrt(3.0);
  switch (id) {
    case CurveId::C4:
      return {bp(-inf, inf, 0.0, true), bp(-1, 1, -1), bp2(0, -1, -1, -inf, inf, true),
              bp(1, 1, 1), bp(inf, inf, 0.0, true)};
    case CurveId::C4p:
      return {bp(-inf, -1, -1), bp(-1, -inf, -3, true), bp2(0, -1, -1, -inf, inf),
              bp(1, 1, 1, true), bp(inf, -1, -1)};
    case CurveId::C6:
      return {bp(-inf, 1, -inf, true), bp(-3, -1, -1), bp2(-s3, -inf, inf, -s3 / 2, -s3 / 2, false, true),
              bp(-1, 1, -1), bp2(0, -1, -1, -inf, inf, true), bp(1, 1, 1),
              bp2(s3, inf, -inf, s3 / 2, s3 / 2, false, true), bp(3, -1, 1), bp(inf, 1, inf, true)};
    case CurveId::C6p:
    case CurveId::C3p:
      return {bp(-inf, 1, inf, true), bp(-3, -1, 1, true), bp(-1, 1, -1, true),
              bp2(0, -1, -1, -inf, inf, true), bp(1, 1, 1, true), bp(3, -1, -1, true), bp(inf, 1, -inf, true)};
    case CurveId::C3:
      return {bp(-inf, 1, inf, true), bp(-3, -1, 1), bp2(-s3, -inf, inf, s3 / 2, s3 / 2),
              bp(-1, 1, -1), bp2(0, -1, -1, -inf, inf, true), bp(1, 1, 1),
              bp2(s3, inf, -inf, -s3 / 2, -s3 / 2), bp(3, -1, -1), bp(inf, 1, -inf, true)};
    case CurveId::M:
      return {bp(-inf, -inf, -1), bp2(0, -1, -1, -inf, inf), bp(1, 1, 1), bp(inf, inf, -1)};
    case CurveId::W2:
    case CurveId::W4:
      return {bp(-inf, -inf, 1, false, true), bp2(-1, -1, -1, inf, -inf, true), bp2(0, -inf, inf, -1, -1, false, true),
              bp2(1, 1, 1, -inf, inf, true), bp(inf, inf, 1, false, true)};
    case CurveId::X: {
      const double a = 0.5 * (5.0 * std::sqrt(5.0) - 11.0), b = 0.5 * (5.0 * std::sqrt(5.0) + 11.0);
      const double l = 11.0 / (5.0 * std::sqrt(5.0));
      return {bp(-inf, -1, -1, true), bp(-2, -0.6, 1), bp(-a, l, inf, false, true), bp(0, 1, 1, true),
              bp(0.5, 0.6, -1), bp(b, -l, -inf, false, true), bp(inf, -1, -1, true)};
    }
  }
  return {};
}

// How the identity's angle enters: L = cosh xi, L = cos theta, or L = coth xi (W4).
enum class AngleKind { Xi, Theta, CothXi };

// One row of an interval table.  p runs over (p_lo, p_hi); L and R move
// monotonically between the listed endpoint values.
struct IntervalRow {
  std::string row;  // "i" or "ii"
  double p_lo, p_hi;
  double L_at_lo, L_at_hi;
  double R_at_lo, R_at_hi;
  bool left_ferrers, right_ferrers;  // argument lies in (-1, 1)
  AngleKind angle;
  double angle_max;  // upper end of the angle range in trigonometric form
  double sweep_hi;   // finite stand-in for p_hi = +inf on verification grids
};

inline std::vector<IntervalRow> interval_rows(CurveId id) {
  using detail::inf;
  const double s3 = std::sqrt(3.0);
  const double sweep = 20.0;
  switch (id) {
    case CurveId::C4:
      return {{"i", 1, inf, 1, inf, 1, 0, false, true, AngleKind::Xi, inf, sweep},
              {"ii", 0, 1, -1, 1, inf, 1, true, false, AngleKind::Theta, pi, 1}};
    case CurveId::C4p:
      return {{"i", 1, inf, 1, -1, 1, -1, true, true, AngleKind::Theta, pi, sweep},
              {"ii", 0, 1, -1, 1, inf, 1, true, false, AngleKind::Theta, pi, 1}};
    case CurveId::C6:
      return {{"i", 1, s3, 1, inf, 1, s3 / 2, false, true, AngleKind::Xi, inf, s3},
              {"ii", 0, 1, -1, 1, inf, 1, true, false, AngleKind::Theta, pi, 1}};
    case CurveId::C6p:
    case CurveId::C3p:
      return {{"i", 1, 3, 1, -1, 1, -1, true, true, AngleKind::Theta, pi, 3},
              {"ii", 0, 1, -1, 1, inf, 1, true, false, AngleKind::Theta, pi, 1}};
    case CurveId::C3:
      return {{"i", 1, s3, 1, inf, 1, -s3 / 2, false, true, AngleKind::Xi, inf, s3},
              {"ii", 0, 1, -1, 1, inf, 1, true, false, AngleKind::Theta, pi, 1}};
    case CurveId::M:
      return {{"i", 1, inf, 1, inf, 1, -1, false, true, AngleKind::Xi, inf, sweep},
              {"ii", 0, 1, -1, 1, inf, 1, true, false, AngleKind::Theta, pi, 1}};
    case CurveId::W2:
      return {{"i", 1, inf, 1, inf, inf, 1, false, false, AngleKind::Xi, inf, sweep}};
    case CurveId::W4:
      return {{"i", 1, inf, 1, inf, inf, 1, false, false, AngleKind::CothXi, inf, sweep}};
    case CurveId::X: {
      const double a = 0.5 * (5.0 * std::sqrt(5.0) - 11.0);
      return {{"i", 0, 0.5, 1, 0.6, 1, -1, true, true, AngleKind::Theta, std::atan(4.0 / 3.0), 0.5},
              {"ii", -a, 0, 11.0 / (5.0 * std::sqrt(5.0)), 1, inf, 1, true, false, AngleKind::Theta,
               std::atan(2.0 / 11.0), 0}};
    }
  }
  return {};
}

inline IntervalRow interval_row(CurveId id, std::string_view row) {
  for (auto& r : interval_rows(id))
    if (r.row == row) return r;
  throw DomainError("curve " + std::string(curve_name(id)) + " has no interval row '" + std::string(row) + "'");
}

// accepts "i", "ii", or a label such as "I6(ii-bar)"
inline std::string row_of_branch(std::string_view branch) {
  auto open = branch.find('(');
  if (open != std::string_view::npos) {
    auto close = branch.find(')', open);
    branch = branch.substr(open + 1, close == std::string_view::npos ? std::string_view::npos : close - open - 1);
  }
  if (auto dash = branch.find("-bar"); dash != std::string_view::npos) branch = branch.substr(0, dash);
  return std::string(branch);
}

inline double row_target(const IntervalRow& row, double angle) {
  switch (row.angle) {
    case AngleKind::Xi: return std::cosh(angle);
    case AngleKind::Theta: return std::cos(angle);
    case AngleKind::CothXi: return 1.0 / std::tanh(angle);
  }
  return 0;
}

// Bracketed solve of L(p) = target on the row's interval.
inline double parameter_for_L(CurveId id, const IntervalRow& row, double target) {
  double lo = row.p_lo, hi = std::isfinite(row.p_hi) ? row.p_hi : 1e8;
  const double span = hi - lo;
  lo += 1e-15 * std::max(1.0, std::abs(lo)) + (span < 1 ? 0 : 0);
  hi -= 1e-15 * std::max(1.0, std::abs(hi));
  auto f = [&](double p) { return curve_point(id, p).L.v - target; };
  double flo = f(lo), fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo > 0) == (fhi > 0)) throw DomainError("target value of L outside the interval row");
  boost::uintmax_t iters = 200;
  auto tol = [](double a, double b) { return std::abs(b - a) <= 1e-15 * std::max(1.0, std::abs(a)); };
  auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
  return 0.5 * (r.first + r.second);
}

// p corresponding to xi or theta on the row selected by branch
inline double trig_parameter(CurveId id, std::string_view branch, double angle) {
  const IntervalRow row = interval_row(id, row_of_branch(branch));
  if (!(angle > 0.0) || !(angle < row.angle_max) || !std::isfinite(angle))
    throw DomainError("angle outside the identity's range");
  const bool first = row.row == "i";
  const double h = 0.5 * angle;
  switch (id) {
    case CurveId::C4: return first ? std::cosh(h) : std::cos(h);
    case CurveId::C4p: {
      double s = std::sin(h);
      return first ? (1.0 + s) / (1.0 - s) : (1.0 - s) / (1.0 + s);
    }
    case CurveId::C6:
    case CurveId::C3: {
      // R = [1 + tanh^2(xi/3)/3]^{-1/2} or [1 - tan^2(theta/3)/3]^{-1/2}, and p^2 - 4Rp + 3 = 0
      double t = first ? std::tanh(angle / 3.0) : std::tan(angle / 3.0);
      double R = 1.0 / std::sqrt(first ? 1.0 + t * t / 3.0 : 1.0 - t * t / 3.0);
      return 3.0 / (2.0 * R + std::sqrt(4.0 * R * R - 3.0));
    }
    case CurveId::C6p:
    case CurveId::C3p: return std::sqrt(3.0) * std::tan((first ? pi + angle : pi - angle) / 6.0);
    case CurveId::M: return first ? std::cosh(h) * std::cosh(h) : std::cos(h) * std::cos(h);
    case CurveId::W2: return std::exp(angle);
    case CurveId::W4: return 1.0 / std::tanh(0.25 * angle);
    case CurveId::X: return first ? std::tan(h) : -std::tan(h);
  }
  return parameter_for_L(id, row, row_target(row, angle));
}

// closed-form expressions, for documentation output
struct CurveFormulas {
  const char* L;
  const char* R;
  const char* A;
  const char* implicit;
};

inline CurveFormulas curve_formulas(CurveId id) {
  switch (id) {
    case CurveId::C4: return {"2p^2 - 1", "1/p", "sqrt(1/p)", "L R^2 + (R^2 - 2)"};
    case CurveId::C4p: return {"-1 + 8p/(p+1)^2", "-1 + 2/p", "sqrt((1+p)/(2p))", "(L-1)(R+3)^2 + 2(R-1)^2"};
    case CurveId::C6:
      return {"1 - 54(p^2-1)/(p^2-3)^3", "(3+p^2)/(4p)", "sqrt((3-p^2)/(2p))", "(L^2-1)(4R^2-3)^3 + 27(R^2-1)"};
    case CurveId::C6p:
      return {"1 - 54(p^2-1)^2/(p^2+3)^3", "(3-p^2)/(2p)", "sqrt((3+p^2)/(4p))", "(L^2-1)(R^2+3)^3 + 27(R^2-1)^2"};
    case CurveId::C3:
      return {"1 - 54(p^2-1)/(p^2-3)^3", "1 - (p-1)(p+3)^3/(8p^3)", "sqrt((3-p^2)^2/(4p^3))",
              "27(4L-5)^3(R^2-1) - 4(L-1)(L+1)^3(4R^2-3)^3"};
    case CurveId::C3p:
      return {"1 - 54(p^2-1)^2/(p^2+3)^3", "1 - (p-1)(p+3)^3/(8p^3)", "sqrt((3+p^2)^2/(16p^3))",
              "27(4L-5)^3(R^2-1)^2 - 4(L-1)(L+1)^3(R^2+3)^3"};
    case CurveId::M: return {"-1 + 2p", "-1 + 2/p", "sqrt(1/p)", "(L+1)(R+1) - 4"};
    case CurveId::W2: return {"(p^2+1)/(2p)", "(p^2+1)/(p^2-1)", "sqrt(2p/(p^2-1))", "(L^2-1)(R^2-1) - 1"};
    case CurveId::W4:
      return {"(p^4+6p^2+1)/(4p(p^2+1))", "(p^4+1)/(p^4-1)", "sqrt(2p/(p^2-1))",
              "16(L^2-1)(R^2-1)(4L^2+4R^2-5) - 1"};
    case CurveId::X:
      return {"(1-p^2)/(1+p^2)", "1 - 2p(2+p)^5/((1+p^2)(1+11p-p^2)^2)", "sqrt((2+p)(1-2p)/(2(1+11p-p^2)))", ""};
  }
  return {};
}

// basepoint where A = 1
inline double curve_basepoint(CurveId id) {
  switch (id) {
    case CurveId::W2:
    case CurveId::W4: return 1.0 + std::sqrt(2.0);
    case CurveId::X: return 0.0;
    default: return 1.0;
  }
}

}  // namespace fracleg

#endif
