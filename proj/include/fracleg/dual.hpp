#ifndef FRACLEG_DUAL_HPP
#define FRACLEG_DUAL_HPP

#include <cmath>

namespace fracleg {

// First-order forward-mode dual number: v is the value, d the derivative
// with respect to whatever parameter the caller has declared.
struct Dual {
  double v = 0.0;
  double d = 0.0;

  constexpr Dual() = default;
  constexpr Dual(double value, double deriv = 0.0) : v(value), d(deriv) {}

  static constexpr Dual variable(double x) { return {x, 1.0}; }

  constexpr Dual operator-() const { return {-v, -d}; }
  constexpr Dual& operator+=(const Dual& o) { v += o.v; d += o.d; return *this; }
  constexpr Dual& operator-=(const Dual& o) { v -= o.v; d -= o.d; return *this; }
  constexpr Dual& operator*=(const Dual& o) { d = d * o.v + v * o.d; v *= o.v; return *this; }
  constexpr Dual& operator/=(const Dual& o) {
    d = (d * o.v - v * o.d) / (o.v * o.v);
    v /= o.v;
    return *this;
  }
};

constexpr Dual operator+(Dual a, const Dual& b) { return a += b; }
constexpr Dual operator-(Dual a, const Dual& b) { return a -= b; }
constexpr Dual operator*(Dual a, const Dual& b) { return a *= b; }
constexpr Dual operator/(Dual a, const Dual& b) { return a /= b; }
constexpr Dual operator+(Dual a, double b) { a.v += b; return a; }
constexpr Dual operator+(double a, Dual b) { b.v += a; return b; }
constexpr Dual operator-(Dual a, double b) { a.v -= b; return a; }
constexpr Dual operator-(double a, const Dual& b) { return {a - b.v, -b.d}; }
constexpr Dual operator*(Dual a, double b) { return {a.v * b, a.d * b}; }
constexpr Dual operator*(double a, Dual b) { return {a * b.v, a * b.d}; }
constexpr Dual operator/(Dual a, double b) { return {a.v / b, a.d / b}; }
constexpr Dual operator/(double a, const Dual& b) { return {a / b.v, -a * b.d / (b.v * b.v)}; }

inline Dual sqrt(const Dual& x) {
  double s = std::sqrt(x.v);
  return {s, x.d / (2.0 * s)};
}
inline Dual exp(const Dual& x) {
  double e = std::exp(x.v);
  return {e, e * x.d};
}
inline Dual log(const Dual& x) { return {std::log(x.v), x.d / x.v}; }
inline Dual sin(const Dual& x) { return {std::sin(x.v), std::cos(x.v) * x.d}; }
inline Dual cos(const Dual& x) { return {std::cos(x.v), -std::sin(x.v) * x.d}; }
inline Dual tan(const Dual& x) {
  double t = std::tan(x.v);
  return {t, (1.0 + t * t) * x.d};
}
inline Dual sinh(const Dual& x) { return {std::sinh(x.v), std::cosh(x.v) * x.d}; }
inline Dual cosh(const Dual& x) { return {std::cosh(x.v), std::sinh(x.v) * x.d}; }
inline Dual tanh(const Dual& x) {
  double t = std::tanh(x.v);
  return {t, (1.0 - t * t) * x.d};
}
inline Dual atan(const Dual& x) { return {std::atan(x.v), x.d / (1.0 + x.v * x.v)}; }
inline Dual acosh(const Dual& x) {
  return {std::acosh(x.v), x.d / std::sqrt((x.v - 1.0) * (x.v + 1.0))};
}
inline Dual acos(const Dual& x) {
  return {std::acos(x.v), -x.d / std::sqrt((1.0 - x.v) * (1.0 + x.v))};
}
// real power x^a for x > 0
inline Dual pow(const Dual& x, double a) {
  double p = std::pow(x.v, a);
  return {p, a * std::pow(x.v, a - 1.0) * x.d};
}
inline Dual abs(const Dual& x) { return x.v < 0 ? -x : x; }

}  // namespace fracleg

#endif
