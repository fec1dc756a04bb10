#ifndef FRACLEG_INDEX_HPP
#define FRACLEG_INDEX_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "fracleg/errors.hpp"

namespace fracleg {

enum class FunctionKind {
  LegendreP,       // P_nu^mu on (1, inf)
  LegendreQhat,    // standard Q_nu^mu without the e^{i mu pi} factor, on (1, inf)
  FerrersP,        // on (-1, 1)
  FerrersQ,        // on (-1, 1)
  FerrersPbar,     // Pbar(x) = FerrersP(-x)
  LegendrePtilde,  // cos[(nu+mu)pi] P - (2/pi) cos(mu pi) sin[(nu+mu)pi] Qhat
};

inline bool is_ferrers(FunctionKind k) {
  return k == FunctionKind::FerrersP || k == FunctionKind::FerrersQ || k == FunctionKind::FerrersPbar;
}

inline bool needs_qhat_normalization(FunctionKind k) {
  return k == FunctionKind::LegendreQhat || k == FunctionKind::FerrersQ ||
         k == FunctionKind::LegendrePtilde;
}

inline std::string_view kind_name(FunctionKind k) {
  switch (k) {
    case FunctionKind::LegendreP: return "legendre-p";
    case FunctionKind::LegendreQhat: return "legendre-qhat";
    case FunctionKind::FerrersP: return "ferrers-p";
    case FunctionKind::FerrersQ: return "ferrers-q";
    case FunctionKind::FerrersPbar: return "ferrers-pbar";
    case FunctionKind::LegendrePtilde: return "legendre-ptilde";
  }
  return "?";
}

inline std::optional<FunctionKind> parse_kind(std::string_view s) {
  for (auto k : {FunctionKind::LegendreP, FunctionKind::LegendreQhat, FunctionKind::FerrersP,
                 FunctionKind::FerrersQ, FunctionKind::FerrersPbar, FunctionKind::LegendrePtilde})
    if (kind_name(k) == s) return k;
  return std::nullopt;
}

inline void check_domain(FunctionKind k, double point) {
  if (is_ferrers(k)) {
    if (!(point > -1.0 && point < 1.0))
      throw DomainError(std::string(kind_name(k)) + ": argument must lie in (-1, 1)");
  } else if (!(point > 1.0) || !std::isfinite(point)) {
    throw DomainError(std::string(kind_name(k)) + ": argument must lie in (1, inf)");
  }
}

// Exact rational number, used so that index classification never depends on
// floating-point sniffing when the caller has exact input.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  // accepts "p", "p/q" and finite decimals such as "-0.25"
  static Rational parse(std::string_view s) {
    auto bad = [&] { return DomainError("cannot parse rational '" + std::string(s) + "'"); };
    auto parse_int = [&](std::string_view t) -> std::int64_t {
      if (t.empty()) throw bad();
      std::size_t i = 0;
      bool neg = false;
      if (t[0] == '-' || t[0] == '+') { neg = t[0] == '-'; i = 1; }
      if (i == t.size()) throw bad();
      std::int64_t v = 0;
      for (; i < t.size(); ++i) {
        if (t[i] < '0' || t[i] > '9') throw bad();
        if (v > (INT64_MAX - 9) / 10) throw bad();
        v = v * 10 + (t[i] - '0');
      }
      return neg ? -v : v;
    };
    if (auto slash = s.find('/'); slash != std::string_view::npos)
      return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      std::string digits(s.substr(0, dot));
      std::string frac(s.substr(dot + 1));
      if (frac.size() > 15) throw bad();
      std::int64_t den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      if (digits.empty() || digits == "-" || digits == "+") digits += "0";
      return Rational(parse_int(digits + frac), den);
    }
    return Rational(parse_int(s));
  }
};

enum class IndexClass { Classical, Fractional, General };

// Degree nu and order mu with the derived classification.  For classical and
// fractional degrees nu = n + sign/r with r in {2,3,4,6}; for r = 2 the
// convention is sign = -1, so nu = n - 1/2.
struct LegendreIndex {
  double nu = 0.0;
  double mu = 0.0;
  IndexClass cls = IndexClass::General;
  int r = 0;
  int n = 0;
  int sign = 0;
  std::optional<int> m;  // set when mu is an integer

  LegendreIndex() = default;
  LegendreIndex(double nu_, double mu_) : nu(nu_), mu(mu_) { classify(); }

  static LegendreIndex exact(const Rational& nu_, const Rational& mu_) {
    LegendreIndex idx;
    idx.nu = nu_.value();
    idx.mu = mu_.value();
    if (mu_.den == 1) idx.m = static_cast<int>(mu_.num);
    std::int64_t d = nu_.den;
    if (d == 2 || d == 3 || d == 4 || d == 6) {
      std::int64_t rem = ((nu_.num % d) + d) % d;  // nu = floor + rem/d
      std::int64_t fl = (nu_.num - rem) / d;
      idx.r = static_cast<int>(d);
      if (rem == 1) { idx.sign = 1; idx.n = static_cast<int>(fl); }
      else { idx.sign = -1; idx.n = static_cast<int>(fl + 1); }
      if (d == 2) idx.sign = -1, idx.n = static_cast<int>(fl + 1);
      idx.cls = idx.m ? (d == 2 ? IndexClass::Classical : IndexClass::Fractional) : IndexClass::General;
    }
    if (idx.cls == IndexClass::General) idx.r = 0, idx.n = 0, idx.sign = 0;
    return idx;
  }

  bool integer_order() const { return m.has_value(); }

 private:
  void classify() {
    constexpr double tol = 1e-12;
    double rm = std::round(mu);
    if (std::abs(mu - rm) <= tol) m = static_cast<int>(rm);
    for (int rr : {2, 3, 4, 6}) {
      double f = nu * rr;
      double rf = std::round(f);
      if (std::abs(f - rf) > tol * rr) continue;
      auto k = static_cast<long long>(rf);
      long long rem = ((k % rr) + rr) % rr;
      if (rr == 2 ? rem != 1 : (rem != 1 && rem != rr - 1)) continue;
      r = rr;
      if (rem == 1 && rr != 2) { sign = 1; n = static_cast<int>((k - 1) / rr); }
      else { sign = -1; n = static_cast<int>((k + 1) / rr); }
      break;
    }
    if (r != 0 && m) cls = r == 2 ? IndexClass::Classical : IndexClass::Fractional;
    else { cls = IndexClass::General; r = 0; n = 0; sign = 0; }
  }
};

// Qhat and FerrersQ carry Gamma(nu+mu+1); reject its poles.
inline void check_qhat_normalization(const LegendreIndex& idx) {
  double s = idx.nu + idx.mu + 1.0;
  if (s <= 1e-12 && std::abs(s - std::round(s)) <= 1e-12)
    throw PoleError("nu + mu is a negative integer: Qhat normalization undefined");
}

}  // namespace fracleg

#endif
