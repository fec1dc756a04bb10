#ifndef FRACLEG_ELLIPTIC_COMBINATION_HPP
#define FRACLEG_ELLIPTIC_COMBINATION_HPP

#include <cmath>
#include <cstdio>
#include <string>

#include "fracleg/dual.hpp"
#include "fracleg/errors.hpp"
#include "fracleg/numerics.hpp"

namespace fracleg {

// Values of the four basis integrals at one modulus; mc = 1 - m
struct EllipticBasis {
  double K = 0, E = 0, Kc = 0, Ec = 0;  // K(m), E(m), K(1-m), E(1-m)

  EllipticBasis(double m, double mc) {
    auto a = complete_elliptic_ke(m, mc), b = complete_elliptic_ke(mc, m);
    K = a.K; E = a.E; Kc = b.K; Ec = b.E;
  }
  explicit EllipticBasis(double m) : EllipticBasis(m, 1.0 - m) {}
};

// a K(m) + b E(m) + c K(1-m) + d E(1-m) at a fixed modulus m.
//
// Each coefficient is a Dual: the v parts give the value, the d parts give
// the coefficients of the derivative with respect to the evaluation
// parameter (xi or theta), expressed in the same basis.  Functions that only
// need the primary integrals leave kc and ec at zero.
struct EllipticCombination {
  double modulus = 0.5;
  double comodulus = 0.5;  // 1 - modulus, carried separately
  Dual k, e, kc, ec;
  // the same coefficients pushed through every operation in absolute value;
  // never cancels, so it bounds what rounding can do along the whole chain
  Dual ak, ae, akc, aec;

  EllipticBasis basis() const { return EllipticBasis(modulus, comodulus); }

  Dual value(const EllipticBasis& b) const {
    return {k.v * b.K + e.v * b.E + kc.v * b.Kc + ec.v * b.Ec,
            k.d * b.K + e.d * b.E + kc.d * b.Kc + ec.d * b.Ec};
  }
  Dual value() const { return value(basis()); }

  // magnitude over |value|: the factor by which rounding anywhere in the
  // construction is amplified
  double condition(const EllipticBasis& b) const {
    double t = ak.v * b.K + ae.v * b.E + akc.v * b.Kc + aec.v * b.Ec;
    double v = std::abs(value(b).v);
    return t == 0.0 ? 1.0 : t / v;
  }

  void reset_magnitude() {
    auto a = [](const Dual& c) { return Dual(std::abs(c.v), std::abs(c.d)); };
    ak = a(k); ae = a(e); akc = a(kc); aec = a(ec);
  }
  double condition() const { return condition(basis()); }

  bool uses_complementary() const {
    return kc.v != 0 || kc.d != 0 || ec.v != 0 || ec.d != 0;
  }

  EllipticCombination& operator+=(const EllipticCombination& o) {
    if (o.modulus != modulus) throw InternalError("adding elliptic combinations at different moduli");
    k += o.k; e += o.e; kc += o.kc; ec += o.ec;
    ak += o.ak; ae += o.ae; akc += o.akc; aec += o.aec;
    return *this;
  }
  EllipticCombination& operator-=(const EllipticCombination& o) { return *this += o * -1.0; }

  // product with a function g of the parameter: (gF)' = g'F + gF'
  EllipticCombination operator*(const Dual& g) const {
    EllipticCombination r = *this;
    r.k = k * g; r.e = e * g; r.kc = kc * g; r.ec = ec * g;
    const Dual ag(std::abs(g.v), std::abs(g.d));
    r.ak = ak * ag; r.ae = ae * ag; r.akc = akc * ag; r.aec = aec * ag;
    return r;
  }
  EllipticCombination operator*(double s) const { return *this * Dual(s, 0.0); }

  // switch the derivative to a new parameter s, given dt/ds
  EllipticCombination reparametrized(double dt_ds) const {
    EllipticCombination r = *this;
    r.k.d *= dt_ds; r.e.d *= dt_ds; r.kc.d *= dt_ds; r.ec.d *= dt_ds;
    const double a = std::abs(dt_ds);
    r.ak.d *= a; r.ae.d *= a; r.akc.d *= a; r.aec.d *= a;
    return r;
  }

  // (F, F') -> (ff F + fd F', df F + dd F'), applied coefficientwise
  EllipticCombination mapped(double ff, double fd, double df, double dd) const {
    auto f = [&](const Dual& c) { return Dual(ff * c.v + fd * c.d, df * c.v + dd * c.d); };
    EllipticCombination r;
    r.modulus = modulus;
    r.comodulus = comodulus;
    r.k = f(k); r.e = f(e); r.kc = f(kc); r.ec = f(ec);
    const double aff = std::abs(ff), afd = std::abs(fd), adf = std::abs(df), add = std::abs(dd);
    auto g = [&](const Dual& c) { return Dual(aff * c.v + afd * c.d, adf * c.v + add * c.d); };
    r.ak = g(ak); r.ae = g(ae); r.akc = g(akc); r.aec = g(aec);
    return r;
  }

  std::string describe() const;
};

inline EllipticCombination operator+(EllipticCombination a, const EllipticCombination& b) { return a += b; }
inline EllipticCombination operator-(EllipticCombination a, const EllipticCombination& b) { return a -= b; }
inline EllipticCombination operator*(const Dual& g, const EllipticCombination& c) { return c * g; }
inline EllipticCombination operator*(double s, const EllipticCombination& c) { return c * s; }

namespace detail {
inline void check_modulus(const Dual& m, double mc) {
  if (!(m.v > 0.0 && mc > 0.0 && m.v < 1.0)) throw DomainError("elliptic modulus outside (0, 1)");
}
inline EllipticCombination at_modulus(const Dual& m, double mc) {
  check_modulus(m, mc);
  EllipticCombination r;
  r.modulus = m.v;
  r.comodulus = mc;
  return r;
}
}  // namespace detail

// c(t) K(m(t)), with the derivative folded back into the basis via
// dK/dm = [E - (1-m)K] / [2m(1-m)].  mc = 1 - m.
inline EllipticCombination times_K(const Dual& c, const Dual& m, double mc) {
  EllipticCombination r = detail::at_modulus(m, mc);
  r.k = {c.v, c.d - c.v * m.d / (2.0 * m.v)};
  r.e = {0.0, c.v * m.d / (2.0 * m.v * mc)};
  r.reset_magnitude();
  return r;
}

// c(t) E(m(t)), using dE/dm = (E - K) / (2m).
inline EllipticCombination times_E(const Dual& c, const Dual& m, double mc) {
  EllipticCombination r = detail::at_modulus(m, mc);
  r.e = {c.v, c.d + c.v * m.d / (2.0 * m.v)};
  r.k = {0.0, -c.v * m.d / (2.0 * m.v)};
  r.reset_magnitude();
  return r;
}

// c(t) K(1 - m(t)) stored against modulus m
inline EllipticCombination times_Kc(const Dual& c, const Dual& m, double mc) {
  EllipticCombination r = detail::at_modulus(m, mc);
  r.kc = {c.v, c.d + c.v * m.d / (2.0 * mc)};
  r.ec = {0.0, -c.v * m.d / (2.0 * m.v * mc)};
  r.reset_magnitude();
  return r;
}

// c(t) E(1 - m(t)) stored against modulus m
inline EllipticCombination times_Ec(const Dual& c, const Dual& m, double mc) {
  EllipticCombination r = detail::at_modulus(m, mc);
  r.ec = {c.v, c.d - c.v * m.d / (2.0 * mc)};
  r.kc = {0.0, c.v * m.d / (2.0 * mc)};
  r.reset_magnitude();
  return r;
}

inline EllipticCombination times_K(const Dual& c, const Dual& m) { return times_K(c, m, 1.0 - m.v); }
inline EllipticCombination times_E(const Dual& c, const Dual& m) { return times_E(c, m, 1.0 - m.v); }
inline EllipticCombination times_Kc(const Dual& c, const Dual& m) { return times_Kc(c, m, 1.0 - m.v); }
inline EllipticCombination times_Ec(const Dual& c, const Dual& m) { return times_Ec(c, m, 1.0 - m.v); }

inline std::string EllipticCombination::describe() const {
  auto num = [](double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::string(buf);
  };
  std::string s = num(k.v) + "*K(m) + " + num(e.v) + "*E(m)";
  if (uses_complementary()) s += " + " + num(kc.v) + "*K(1-m) + " + num(ec.v) + "*E(1-m)";
  return s + ", m = " + num(modulus);
}

}  // namespace fracleg

#endif
