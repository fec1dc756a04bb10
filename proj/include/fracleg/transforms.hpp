#ifndef FRACLEG_TRANSFORMS_HPP
#define FRACLEG_TRANSFORMS_HPP

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "fracleg/curves.hpp"
#include "fracleg/elliptic_combination.hpp"
#include "fracleg/errors.hpp"
#include "fracleg/hypergeometric.hpp"
#include "fracleg/index.hpp"
#include "fracleg/kernel.hpp"
#include "fracleg/numerics.hpp"

namespace fracleg {

enum class AlphaConstraint { Free, ZeroOnly, TwoParameter };

struct IdentityParams {
  double alpha = 0.0;
  double beta = 0.0;
};

using ParamFn = std::function<double(const IdentityParams&)>;

// c * u_nu^mu(arg), one side of an identity; with qhat_weight set, u is
// replaced by u + w Qhat_nu^mu (same index, Legendre sides only)
struct IdentitySide {
  FunctionKind kind;
  ParamFn nu, mu;
  ParamFn constant;
  std::string text;  // e.g. "2^alpha A(p) P_{alpha-1/2}^{-alpha}"
  ParamFn qhat_weight = {};
};

// u is evaluated at L(p); v at R(p) and multiplied by A(p)
struct IdentityRecord {
  std::string label;   // "I6'(ii-bar)"
  std::string family;  // "I6'"
  CurveId curve;
  std::string row;     // interval row: "i" or "ii"
  bool bar = false;
  IdentitySide left, right;
  AlphaConstraint constraint = AlphaConstraint::Free;
  ParamFn gamma_argument;  // argument of a Gamma factor in the multiplier, if any
};

namespace detail {

inline ParamFn constant_fn(double c) {
  return [c](const IdentityParams&) { return c; };
}

inline IdentityRecord make_record(std::string family, CurveId curve, std::string row, bool bar, IdentitySide l,
                                  IdentitySide r, AlphaConstraint ac, ParamFn gamma_arg = {}) {
  IdentityRecord rec;
  rec.family = family;
  rec.label = family + "(" + row + (bar ? "-bar" : "") + ")";
  rec.curve = curve;
  rec.row = std::move(row);
  rec.bar = bar;
  rec.left = std::move(l);
  rec.right = std::move(r);
  rec.constraint = ac;
  rec.gamma_argument = std::move(gamma_arg);
  return rec;
}

inline double csc(double x) { return 1.0 / std::sin(x); }

// I4, I6: u_{-1/r}^{-alpha}(L) = c(alpha) A v_{k alpha - 1/2}^{-alpha}(R)
inline void add_free_family(std::vector<IdentityRecord>& out, const std::string& fam, CurveId curve, int r,
                            double k, double base, const std::string& base_text) {
  const double nu_l = -1.0 / r, cs = csc(pi / r);
  const std::string rs = std::to_string(r);
  ParamFn nul = constant_fn(nu_l);
  ParamFn mul = [](const IdentityParams& q) { return -q.alpha; };
  ParamFn nur = [k](const IdentityParams& q) { return k * q.alpha - 0.5; };
  ParamFn mur = [](const IdentityParams& q) { return -q.alpha; };
  ParamFn c1 = [base](const IdentityParams& q) { return std::pow(base, q.alpha); };
  ParamFn c2 = [base](const IdentityParams& q) { return std::pow(base, q.alpha) * 2.0 / pi; };
  const std::string vi = k == 1.0 ? "_{alpha-1/2}^{-alpha}" : "_{2alpha-1/2}^{-alpha}";
  const std::string ui = "_{-1/" + rs + "}^{-alpha}";
  using K = FunctionKind;
  out.push_back(make_record(fam, curve, "i", false, {K::LegendreP, nul, mul, constant_fn(1.0), "P" + ui},
                            {K::FerrersP, nur, mur, c1, base_text + " A ferrers-P" + vi}, AlphaConstraint::Free));
  // csc(pi/r) times the mean of P(-L +- i0), which is Ptilde only at alpha = 0:
  //   cos(nu pi) P - (2/pi) sin[(nu+mu)pi] Qhat
  const double cn = cospi(nu_l);
  ParamFn w = [nu_l, cn](const IdentityParams& q) { return -(2.0 / pi) * sinpi(nu_l - q.alpha) / cn; };
  IdentitySide mean{K::LegendreP, nul, mul, constant_fn(cs * cn),
                    "csc(pi/" + rs + ") [cos(pi/" + rs + ") P" + ui + " - (2/pi) sin((alpha+1/" + rs + ")pi) Qhat" +
                        ui + "]",
                    w};
  out.push_back(make_record(fam, curve, "i", true, mean,
                            {K::FerrersQ, nur, mur, c2, base_text + " A (2/pi) ferrers-Q" + vi},
                            AlphaConstraint::Free));
  out.push_back(make_record(fam, curve, "ii", false, {K::FerrersP, nul, mul, constant_fn(1.0), "ferrers-P" + ui},
                            {K::LegendreP, nur, mur, c1, base_text + " A P" + vi}, AlphaConstraint::Free));
  out.push_back(make_record(fam, curve, "ii", true,
                            {K::FerrersPbar, nul, mul, constant_fn(cs), "csc(pi/" + rs + ") ferrers-Pbar" + ui},
                            {K::LegendreQhat, nur, mur, c2, base_text + " A (2/pi) Qhat" + vi},
                            AlphaConstraint::Free));
}

// I3, I3', I4': order-zero identities u_{-1/r}(L) = A v_{-1/2}(R)
inline void add_zero_family(std::vector<IdentityRecord>& out, const std::string& fam, CurveId curve, int r,
                            bool primed) {
  const double cs = csc(pi / r);
  const std::string rs = std::to_string(r);
  ParamFn nul = constant_fn(-1.0 / r), nur = constant_fn(-0.5), zero = constant_fn(0.0);
  const std::string ui = "_{-1/" + rs + "}", vi = "_{-1/2}";
  using K = FunctionKind;
  constexpr auto Z = AlphaConstraint::ZeroOnly;
  if (!primed) {
    out.push_back(make_record(fam, curve, "i", false, {K::LegendreP, nul, zero, constant_fn(1.0), "P" + ui},
                              {K::FerrersP, nur, zero, constant_fn(1.0), "A ferrers-P" + vi}, Z));
    out.push_back(make_record(fam, curve, "i", true,
                              {K::LegendrePtilde, nul, zero, constant_fn(cs), "csc(pi/" + rs + ") Ptilde" + ui},
                              {K::FerrersQ, nur, zero, constant_fn(2.0 / pi), "A (2/pi) ferrers-Q" + vi}, Z));
    out.push_back(make_record(fam, curve, "ii", false, {K::FerrersP, nul, zero, constant_fn(1.0), "ferrers-P" + ui},
                              {K::LegendreP, nur, zero, constant_fn(1.0), "A P" + vi}, Z));
    out.push_back(make_record(fam, curve, "ii", true,
                              {K::FerrersPbar, nul, zero, constant_fn(cs), "csc(pi/" + rs + ") ferrers-Pbar" + ui},
                              {K::LegendreQhat, nur, zero, constant_fn(2.0 / pi), "A (2/pi) Qhat" + vi}, Z));
    return;
  }
  const std::string half = "(1/2)csc(pi/" + rs + ") ";
  out.push_back(make_record(fam, curve, "i", false, {K::FerrersP, nul, zero, constant_fn(1.0), "ferrers-P" + ui},
                            {K::FerrersP, nur, zero, constant_fn(1.0), "A ferrers-P" + vi}, Z));
  out.push_back(make_record(fam, curve, "i", true,
                            {K::FerrersPbar, nul, zero, constant_fn(0.5 * cs), half + "ferrers-Pbar" + ui},
                            {K::FerrersPbar, nur, zero, constant_fn(1.0), "A ferrers-Pbar" + vi}, Z));
  out.push_back(make_record(fam, curve, "ii", false, {K::FerrersP, nul, zero, constant_fn(1.0), "ferrers-P" + ui},
                            {K::LegendreP, nur, zero, constant_fn(1.0), "A P" + vi}, Z));
  out.push_back(make_record(fam, curve, "ii", true,
                            {K::FerrersPbar, nul, zero, constant_fn(0.5 * cs), half + "ferrers-Pbar" + ui},
                            {K::LegendreQhat, nur, zero, constant_fn(2.0 / pi), "A (2/pi) Qhat" + vi}, Z));
}

inline std::vector<IdentityRecord> build_catalogue() {
  using K = FunctionKind;
  std::vector<IdentityRecord> out;
  add_free_family(out, "I4", CurveId::C4, 4, 1.0, 2.0, "2^alpha");
  add_zero_family(out, "I4'", CurveId::C4p, 4, true);
  add_free_family(out, "I6", CurveId::C6, 6, 2.0, std::pow(3.0, 1.5), "3^(3alpha/2)");

  {  // I6': u_{-1/6}^{-alpha}(L) = 3^{3alpha/2} Gamma(alpha+1/2)/sqrt(pi) A v_{alpha-1/2}^{-2alpha}(R)
    const double hc = 0.5 * csc(pi / 6);
    ParamFn nul = constant_fn(-1.0 / 6), mul = [](const IdentityParams& q) { return -q.alpha; };
    ParamFn nur = [](const IdentityParams& q) { return q.alpha - 0.5; };
    ParamFn mur = [](const IdentityParams& q) { return -2.0 * q.alpha; };
    auto head = [](const IdentityParams& q) { return std::pow(3.0, 1.5 * q.alpha) * gamma_fn(q.alpha + 0.5) / std::sqrt(pi); };
    ParamFn c1 = head;
    ParamFn c2 = [head](const IdentityParams& q) { return head(q) * (2.0 / pi) * cospi(q.alpha); };
    ParamFn g = [](const IdentityParams& q) { return q.alpha + 0.5; };
    const std::string hd = "3^(3alpha/2) Gamma(alpha+1/2)/sqrt(pi) A ";
    const std::string ui = "_{-1/6}^{-alpha}", vi = "_{alpha-1/2}^{-2alpha}";
    constexpr auto F = AlphaConstraint::Free;
    out.push_back(make_record("I6'", CurveId::C6p, "i", false, {K::FerrersP, nul, mul, constant_fn(1.0), "ferrers-P" + ui},
                              {K::FerrersP, nur, mur, c1, hd + "ferrers-P" + vi}, F, g));
    out.push_back(make_record("I6'", CurveId::C6p, "i", true,
                              {K::FerrersPbar, nul, mul, constant_fn(hc), "(1/2)csc(pi/6) ferrers-Pbar" + ui},
                              {K::FerrersPbar, nur, mur, c1, hd + "ferrers-Pbar" + vi}, F, g));
    out.push_back(make_record("I6'", CurveId::C6p, "ii", false, {K::FerrersP, nul, mul, constant_fn(1.0), "ferrers-P" + ui},
                              {K::LegendreP, nur, mur, c1, hd + "P" + vi}, F, g));
    out.push_back(make_record("I6'", CurveId::C6p, "ii", true,
                              {K::FerrersPbar, nul, mul, constant_fn(hc), "(1/2)csc(pi/6) ferrers-Pbar" + ui},
                              {K::LegendreQhat, nur, mur, c2, hd + "(2/pi) cos(alpha pi) Qhat" + vi}, F, g));
  }

  add_zero_family(out, "I3", CurveId::C3, 3, false);
  add_zero_family(out, "I3'", CurveId::C3p, 3, true);

  {  // M: u_{alpha-1/2}^{-2alpha}(L) = A v_{alpha-1/2}^{-2alpha}(R)
    ParamFn nu = [](const IdentityParams& q) { return q.alpha - 0.5; };
    ParamFn mu = [](const IdentityParams& q) { return -2.0 * q.alpha; };
    ParamFn one = constant_fn(1.0);
    ParamFn cq = [](const IdentityParams& q) { return (2.0 / pi) * cospi(q.alpha); };
    const std::string i = "_{alpha-1/2}^{-2alpha}";
    constexpr auto F = AlphaConstraint::Free;
    out.push_back(make_record("M", CurveId::M, "i", false, {K::LegendreP, nu, mu, one, "P" + i},
                              {K::FerrersP, nu, mu, one, "A ferrers-P" + i}, F));
    out.push_back(make_record("M", CurveId::M, "i", true, {K::LegendreQhat, nu, mu, cq, "(2/pi) cos(alpha pi) Qhat" + i},
                              {K::FerrersPbar, nu, mu, one, "A ferrers-Pbar" + i}, F));
    out.push_back(make_record("M", CurveId::M, "ii", false, {K::FerrersP, nu, mu, one, "ferrers-P" + i},
                              {K::LegendreP, nu, mu, one, "A P" + i}, F));
    out.push_back(make_record("M", CurveId::M, "ii", true, {K::FerrersPbar, nu, mu, one, "ferrers-Pbar" + i},
                              {K::LegendreQhat, nu, mu, cq, "A (2/pi) cos(alpha pi) Qhat" + i}, F));
  }

  {  // W2: u_{alpha-1/2}^{-beta}(L) = sqrt(pi)/Gamma(beta-alpha+1/2) A v_{beta-1/2}^{-alpha}(R)
    ParamFn nul = [](const IdentityParams& q) { return q.alpha - 0.5; };
    ParamFn mul = [](const IdentityParams& q) { return -q.beta; };
    ParamFn nur = [](const IdentityParams& q) { return q.beta - 0.5; };
    ParamFn mur = [](const IdentityParams& q) { return -q.alpha; };
    auto head = [](const IdentityParams& q) { return std::sqrt(pi) * rgamma(q.beta - q.alpha + 0.5); };
    ParamFn g = [](const IdentityParams& q) { return q.beta - q.alpha + 0.5; };
    constexpr auto T = AlphaConstraint::TwoParameter;
    const std::string hd = "sqrt(pi)/Gamma(beta-alpha+1/2) A ";
    out.push_back(make_record("W2", CurveId::W2, "i", false,
                              {K::LegendreP, nul, mul, constant_fn(std::sqrt(2.0)), "sqrt(2) P_{alpha-1/2}^{-beta}"},
                              {K::LegendreQhat, nur, mur, [head](const IdentityParams& q) { return head(q) * 2.0 / pi; },
                               hd + "(2/pi) Qhat_{beta-1/2}^{-alpha}"},
                              T, g));
    out.push_back(make_record("W2", CurveId::W2, "i", true,
                              {K::LegendreQhat, nul, mul,
                               [](const IdentityParams& q) { return (2.0 / pi) * cospi(q.beta - q.alpha); },
                               "(2/pi) cos((beta-alpha) pi) Qhat_{alpha-1/2}^{-beta}"},
                              {K::LegendreP, nur, mur, [head](const IdentityParams& q) { return head(q) * std::sqrt(2.0); },
                               hd + "sqrt(2) P_{beta-1/2}^{-alpha}"},
                              T, g));
  }

  {  // W4: u_{2alpha-1/2}^{-alpha}(L) = A v_{2alpha-1/2}^{-alpha}(R)
    ParamFn nu = [](const IdentityParams& q) { return 2.0 * q.alpha - 0.5; };
    ParamFn mu = [](const IdentityParams& q) { return -q.alpha; };
    const std::string i = "_{2alpha-1/2}^{-alpha}";
    out.push_back(make_record("W4", CurveId::W4, "i", false, {K::LegendreP, nu, mu, constant_fn(2.0), "2 P" + i},
                              {K::LegendreQhat, nu, mu, constant_fn(2.0 / pi), "A (2/pi) Qhat" + i},
                              AlphaConstraint::Free));
    out.push_back(make_record("W4", CurveId::W4, "i", true,
                              {K::LegendreQhat, nu, mu, constant_fn(2.0 / pi), "(2/pi) Qhat" + i},
                              {K::LegendreP, nu, mu, constant_fn(2.0), "A 2 P" + i}, AlphaConstraint::Free));
  }

  {  // X: P_{-1/4}^{-1/10}(L) = Gamma(6/5)/(sqrt(2) Gamma(11/10)) A v_{-1/4}^{-1/5}(R)
    const double c = gamma_fn(1.2) / (std::sqrt(2.0) * gamma_fn(1.1));
    ParamFn nu = constant_fn(-0.25), mul = constant_fn(-0.1), mur = constant_fn(-0.2);
    const std::string hd = "Gamma(6/5)/(sqrt(2) Gamma(11/10)) A ";
    out.push_back(make_record("X", CurveId::X, "i", false,
                              {K::FerrersP, nu, mul, constant_fn(1.0), "ferrers-P_{-1/4}^{-1/10}"},
                              {K::FerrersP, nu, mur, constant_fn(c), hd + "ferrers-P_{-1/4}^{-1/5}"},
                              AlphaConstraint::ZeroOnly));
    out.push_back(make_record("X", CurveId::X, "ii", false,
                              {K::FerrersP, nu, mul, constant_fn(1.0), "ferrers-P_{-1/4}^{-1/10}"},
                              {K::LegendreP, nu, mur, constant_fn(c), hd + "P_{-1/4}^{-1/5}"},
                              AlphaConstraint::ZeroOnly));
  }
  return out;
}

}  // namespace detail

inline const std::vector<IdentityRecord>& catalogue() {
  static const std::vector<IdentityRecord> records = detail::build_catalogue();
  return records;
}

inline const IdentityRecord* find_identity(std::string_view label) {
  for (auto& r : catalogue())
    if (r.label == label) return &r;
  return nullptr;
}

inline const IdentityRecord& identity(std::string_view label) {
  if (auto r = find_identity(label)) return *r;
  throw DomainError("unknown identity label '" + std::string(label) + "'");
}

struct IdentityEvaluation {
  double p = 0, L = 0, R = 0, A = 0;
  double lhs = 0, rhs = 0, gap = 0;
  bool reduced_precision = false;
};

namespace detail {

inline constexpr double degenerate_tol = 1e-9;

inline bool near_pole(double x) { return x < degenerate_tol && std::abs(x - std::round(x)) < degenerate_tol; }

inline std::string fmt(double x) {
  char b[40];
  std::snprintf(b, sizeof b, "%.12g", x);
  return b;
}

inline void check_params(const IdentityRecord& rec, const IdentityParams& q) {
  if (!std::isfinite(q.alpha) || !std::isfinite(q.beta)) throw DomainError(rec.label + ": non-finite parameter");
  if (rec.constraint == AlphaConstraint::ZeroOnly && (q.alpha != 0.0 || q.beta != 0.0))
    throw DomainError(rec.label + " holds only at alpha = 0");
  if (rec.constraint == AlphaConstraint::Free && q.beta != 0.0)
    throw DomainError(rec.label + " takes a single parameter alpha");
  const std::string where = rec.label + " at alpha=" + fmt(q.alpha) +
                            (rec.constraint == AlphaConstraint::TwoParameter ? ", beta=" + fmt(q.beta) : "");
  if (rec.gamma_argument && near_pole(rec.gamma_argument(q)))
    throw DegenerateParameterError(where + ": the Gamma factor in the multiplier has a pole; the identity holds "
                                           "only in a limiting sense");
  for (const IdentitySide* s : {&rec.left, &rec.right}) {
    if (!needs_qhat_normalization(s->kind) && !s->qhat_weight) continue;
    double t = s->nu(q) + s->mu(q) + 1.0;
    if (near_pole(t))
      throw DegenerateParameterError(where + ": Gamma(nu+mu+1) in " + std::string(kind_name(s->kind)) +
                                     " has a pole and the multiplier vanishes; the identity holds only in a "
                                     "limiting sense. Use Olver's normalized function Q = Qhat/Gamma(nu+mu+1) "
                                     "to evaluate it");
  }
}

inline void check_in_row(const IdentityRecord& rec, const IntervalRow& row, double p) {
  if (!(p > row.p_lo && p < row.p_hi))
    throw DomainError(rec.label + ": p = " + fmt(p) + " outside the interval (" + fmt(row.p_lo) + ", " +
                      fmt(row.p_hi) + ")");
}

}  // namespace detail

// lhs by the hypergeometric oracle, rhs by the elliptic kernel when the right
// index is classical (oracle otherwise); gap = |lhs - rhs| / (1 + |lhs|).
// p is snapped (see snap_point) and the reported p is the one used.
inline IdentityEvaluation identity_sides(const IdentityRecord& rec, const IdentityParams& q, double p) {
  detail::check_params(rec, q);
  const IntervalRow row = interval_row(rec.curve, rec.row);
  detail::check_in_row(rec, row, p);
  const SnappedPoint c = snap_point(rec.curve, p, is_ferrers(rec.left.kind), is_ferrers(rec.right.kind));
  IdentityEvaluation ev;
  ev.p = c.p;
  ev.L = c.L;
  ev.R = c.R;
  ev.A = c.A;
  const LegendreIndex li(rec.left.nu(q), rec.left.mu(q)), ri(rec.right.nu(q), rec.right.mu(q));
  auto lo = oracle_legendre_ex(rec.left.kind, li, ev.L);
  ev.reduced_precision = lo.reduced_precision;
  if (rec.left.qhat_weight) {
    auto lq = oracle_legendre_ex(FunctionKind::LegendreQhat, li, ev.L);
    ev.reduced_precision = ev.reduced_precision || lq.reduced_precision;
    lo.value += rec.left.qhat_weight(q) * lq.value;
  }
  ev.lhs = rec.left.constant(q) * lo.value;
  ev.rhs = rec.right.constant(q) * ev.A * detail::reference_value(rec.right.kind, ri, ev.R);
  ev.gap = std::abs(ev.lhs - ev.rhs) / (1.0 + std::abs(ev.lhs));
  return ev;
}

inline IdentityEvaluation identity_sides(std::string_view label, const IdentityParams& q, double p) {
  return identity_sides(identity(label), q, p);
}

// interior grid of n points, margin 1e-3 from each end (infinite ends cut at the row's sweep bound)
inline std::vector<double> identity_grid(const IdentityRecord& rec, int n) {
  if (n < 2) throw DomainError("grid needs at least 2 points");
  const IntervalRow row = interval_row(rec.curve, rec.row);
  const double margin = 1e-3;
  double lo = row.p_lo + margin;
  double hi = (std::isfinite(row.p_hi) ? row.p_hi : row.sweep_hi) - margin;
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

inline const std::vector<double>& default_alpha_grid() {
  static const std::vector<double> g = {0.0, 0.2, -0.2, 0.5 - 1e-3, -0.5 + 1e-3, 1.0, 2.0};
  return g;
}

inline std::vector<IdentityParams> parameter_grid(const IdentityRecord& rec, const std::vector<double>& alphas,
                                                  const std::vector<double>& betas) {
  std::vector<IdentityParams> out;
  switch (rec.constraint) {
    case AlphaConstraint::ZeroOnly: out.push_back({}); break;
    case AlphaConstraint::Free:
      for (double a : alphas) out.push_back({a, 0.0});
      break;
    case AlphaConstraint::TwoParameter:
      for (double a : alphas)
        for (double b : betas) out.push_back({a, b});
      break;
  }
  return out;
}

struct VerificationRow {
  std::string label;
  double alpha = 0, beta = 0, p = 0, L = 0, R = 0, lhs = 0, rhs = 0, gap = 0;
};

inline std::vector<VerificationRow> verify_identity(const IdentityRecord& rec, int grid,
                                                    const std::vector<double>& alphas,
                                                    const std::vector<double>& betas) {
  std::vector<VerificationRow> rows;
  const auto ps = identity_grid(rec, grid);
  for (const auto& q : parameter_grid(rec, alphas, betas))
    for (double p : ps) {
      auto ev = identity_sides(rec, q, p);
      rows.push_back({rec.label, q.alpha, q.beta, p, ev.L, ev.R, ev.lhs, ev.rhs, ev.gap});
    }
  return rows;
}

inline constexpr const char* verification_csv_header = "label,alpha,beta,p,L,R,lhs,rhs,gap";

inline void write_verification_csv(std::ostream& os, const std::vector<VerificationRow>& rows) {
  os << verification_csv_header << '\n';
  char buf[64];
  auto num = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string(buf);
  };
  for (auto& r : rows)
    os << '"' << r.label << '"' << ',' << num(r.alpha) << ',' << num(r.beta) << ',' << num(r.p) << ','
       << num(r.L) << ',' << num(r.R) << ',' << num(r.lhs) << ',' << num(r.rhs) << ',' << num(r.gap) << '\n';
}

// ---------------------------------------------------------------------------
// reduction of fractional degrees to elliptic integrals

struct FractionalEvaluation {
  EllipticCombination combination;  // derivative coefficients are d/dxi or d/dtheta
  std::string trace;
  double value() const { return combination.value().v; }
};

namespace detail {

inline double angle_of(bool ferrers, double x) { return ferrers ? std::acos(x) : std::acosh(x); }

// dx/dt for x = cos t or cosh t
inline double dpoint_dangle(bool ferrers, double t) { return ferrers ? -std::sin(t) : std::sinh(t); }

// u(point) = (c_R / c_L) A(p) v(R(p)) as a combination in the angle of point
inline EllipticCombination identity_combination(const IdentityRecord& rec, const IdentityParams& q, double point) {
  check_params(rec, q);
  const bool lf = is_ferrers(rec.left.kind), rf = is_ferrers(rec.right.kind);
  const double t = angle_of(lf, point);
  const double p = trig_parameter(rec.curve, rec.row, t);
  const CurvePoint c = curve_point(rec.curve, p);
  const double dp_dt = dpoint_dangle(lf, t) / c.L.d;
  const double s = angle_of(rf, c.R.v);
  const double ds_dt = c.R.d / dpoint_dangle(rf, s) * dp_dt;
  const LegendreIndex ri(rec.right.nu(q), rec.right.mu(q));
  const double k = rec.right.constant(q) / rec.left.constant(q);
  EllipticCombination v = eval_classical(rec.right.kind, ri, c.R.v).reparametrized(ds_dt);
  return v * Dual(k * c.A.v, k * c.A.d * dp_dt);
}

inline std::string alpha_tag(const IdentityRecord& rec, double alpha) {
  return rec.label + "@alpha=" + std::to_string(static_cast<int>(std::lround(alpha)));
}

// F_{-1/r}^m for r in {4, 6} straight from the I4/I6 identities at alpha = -m;
// Q kinds come from P with P + w Qhat, or ferrers-P with ferrers-Pbar
inline FractionalEvaluation fractional_base_direct(FunctionKind kind, int r, int m, double point) {
  const std::string fam = r == 4 ? "I4" : "I6";
  const IdentityParams q{static_cast<double>(-m), 0.0};
  const double nu = -1.0 / r, cs = std::cos((nu + m) * pi), sn = std::sin((nu + m) * pi);
  FractionalEvaluation out;
  auto use = [&](const char* row) -> EllipticCombination {
    const auto& rec = identity(fam + "(" + row + ")");
    if (!out.trace.empty()) out.trace += ", ";
    out.trace += alpha_tag(rec, q.alpha);
    return identity_combination(rec, q, point);
  };
  switch (kind) {
    case FunctionKind::LegendreP: out.combination = use("i"); break;
    case FunctionKind::FerrersP: out.combination = use("ii"); break;
    case FunctionKind::LegendreQhat: {
      auto P = use("i");
      auto Pw = use("i-bar");
      const double w = identity(fam + "(i-bar)").left.qhat_weight(q);
      out.combination = (Pw - P) * (1.0 / w);
      break;
    }
    case FunctionKind::FerrersQ: {
      auto F = use("ii");
      auto Fb = use("ii-bar");
      // Pbar = cos[(nu+m)pi] P - (2/pi) sin[(nu+m)pi] Q
      out.combination = (F * cs - Fb) * (pi / (2.0 * sn));
      break;
    }
    default: throw DomainError("eval_fractional: unsupported kind");
  }
  return out;
}

// F_{-1/3}^0 from I3, then order ladders on the fractional side
inline FractionalEvaluation fractional_base_r3(FunctionKind kind, int m, double point) {
  const double nu = -1.0 / 3.0, cs = cospi(nu), sn = sinpi(nu);
  FractionalEvaluation out;
  auto use = [&](const char* row) {
    const auto& rec = identity(std::string("I3(") + row + ")");
    if (!out.trace.empty()) out.trace += ", ";
    out.trace += rec.label;
    return identity_combination(rec, {}, point);
  };
  switch (kind) {
    case FunctionKind::LegendreP: out.combination = use("i"); break;
    case FunctionKind::FerrersP: out.combination = use("ii"); break;
    case FunctionKind::LegendreQhat: {
      auto P = use("i");
      auto Pt = use("i-bar");
      out.combination = (P * cs - Pt) * (pi / (2.0 * sn));
      break;
    }
    case FunctionKind::FerrersQ: {
      auto F = use("ii");
      auto Fb = use("ii-bar");
      out.combination = (F * cs - Fb) * (pi / (2.0 * sn));
      break;
    }
    default: throw DomainError("eval_fractional: unsupported kind");
  }
  if (m != 0) {
    LadderState<EllipticCombination> st{out.combination, LegendreIndex(nu, 0.0)};
    for (int i = 0; i < std::abs(m); ++i) st = ladder_order(kind, st, m > 0 ? 1 : -1, point);
    out.combination = st.value;
    out.trace += ", order ladder " + std::string(m > 0 ? "+" : "-") + std::to_string(std::abs(m));
  }
  return out;
}

// degree n - 1/r, order m
inline FractionalEvaluation fractional_minus(FunctionKind kind, int r, int n, int m, double point) {
  FractionalEvaluation out = r == 3 ? fractional_base_r3(kind, m, point) : fractional_base_direct(kind, r, m, point);
  if (n != 0) {
    LadderState<EllipticCombination> st{out.combination, LegendreIndex(-1.0 / r, m)};
    for (int i = 0; i < std::abs(n); ++i) st = ladder_degree(kind, st, n > 0 ? 1 : -1, point);
    out.combination = st.value;
    out.trace += ", degree ladder " + std::string(n > 0 ? "+" : "-") + std::to_string(std::abs(n));
  }
  return out;
}

}  // namespace detail

// Legendre or Ferrers function of degree n +- 1/r and integer order as an
// elliptic combination, with the chain of identities and ladders in trace
inline FractionalEvaluation eval_fractional(FunctionKind kind, const LegendreIndex& idx, double point) {
  using K = FunctionKind;
  if (kind != K::LegendreP && kind != K::LegendreQhat && kind != K::FerrersP && kind != K::FerrersQ)
    throw DomainError("eval_fractional: kind must be legendre-p, legendre-qhat, ferrers-p or ferrers-q");
  check_domain(kind, point);
  if (idx.cls == IndexClass::General || !idx.m)
    throw UnsupportedIndexError("eval_fractional: degree must be n +- 1/r with r in {2,3,4,6} and order an integer");
  const int m = *idx.m, r = idx.r, n = idx.n;
  if (std::abs(n) > 10 || std::abs(m) > 10)
    throw StabilityError("eval_fractional: |n| and |m| are limited to 10");
  if (needs_qhat_normalization(kind)) check_qhat_normalization(idx);

  if (r == 2) return {eval_classical(kind, idx, point), "classical ladders from degree -1/2"};
  if (idx.sign < 0) return detail::fractional_minus(kind, r, n, m, point);

  // degree n + 1/r = -nu0 - 1 with nu0 = (-n-1) - 1/r
  const int n0 = -n - 1;
  const LegendreIndex i0(n0 - 1.0 / r, m);
  if (kind == K::LegendreP || kind == K::FerrersP) {
    auto out = detail::fractional_minus(kind, r, n0, m, point);
    out.trace = "degree nu -> -nu-1, " + out.trace;
    return out;
  }
  auto c = reflection_coefficients(kind, i0);
  auto same = detail::fractional_minus(kind, r, n0, m, point);
  FractionalEvaluation out;
  out.combination = same.combination * c.same;
  out.trace = "degree reflection [" + same.trace + "]";
  if (c.other != 0.0) {
    const bool leg = kind == K::LegendreQhat;
    auto other = detail::fractional_minus(leg ? K::LegendreP : K::FerrersP, r, n0, leg ? -m : m, point);
    out.combination += other.combination * c.other;
    out.trace += " + [" + other.trace + "]";
  }
  return out;
}

// ---------------------------------------------------------------------------
// dispatcher

enum class EvalMethod { Classical, Fractional, Oracle };

inline std::string_view method_name(EvalMethod m) {
  switch (m) {
    case EvalMethod::Classical: return "classical";
    case EvalMethod::Fractional: return "fractional";
    case EvalMethod::Oracle: return "oracle";
  }
  return "?";
}

struct Evaluation {
  double value = 0;
  std::optional<double> derivative;  // d/dxi or d/dtheta
  std::optional<EllipticCombination> combination;
  EvalMethod method = EvalMethod::Oracle;
  std::string trace;
  bool reduced_precision = false;
};

namespace detail {

inline std::optional<FractionalEvaluation> elliptic_route(FunctionKind kind, const LegendreIndex& idx, double point) {
  using K = FunctionKind;
  if (idx.cls == IndexClass::General || !idx.m) return std::nullopt;
  if (std::abs(idx.n) > 10 || std::abs(*idx.m) > 10) return std::nullopt;
  if (kind == K::FerrersPbar) {
    auto f = eval_fractional(K::FerrersP, idx, -point);
    f.combination = f.combination.reparametrized(-1.0);
    f.trace = "ferrers-P at -x: " + f.trace;
    return f;
  }
  if (kind == K::LegendrePtilde) {
    const double s = sinpi(idx.nu + idx.mu), c = cospi(idx.nu + idx.mu);
    auto P = eval_fractional(K::LegendreP, idx, point);
    FractionalEvaluation f{P.combination * c, "cos P - sin Qhat: [" + P.trace + "]"};
    if (s != 0.0) {
      auto Q = eval_fractional(K::LegendreQhat, idx, point);
      f.combination -= Q.combination * ((2.0 / pi) * cospi(idx.mu) * s);
      f.trace += " [" + Q.trace + "]";
    } else if (idx.nu + idx.mu < 0.0) {
      throw PoleError("legendre-ptilde: nu + mu is a negative integer");
    }
    return f;
  }
  return eval_fractional(kind, idx, point);
}

}  // namespace detail

// elliptic route when the index allows it (within the ladder budget, without heavy
// cancellation), else the oracle
inline Evaluation evaluate(FunctionKind kind, const LegendreIndex& idx, double point) {
  check_domain(kind, point);
  Evaluation ev;
  std::optional<FractionalEvaluation> f;
  try {
    f = detail::elliptic_route(kind, idx, point);
  } catch (const StabilityError&) {
    f.reset();
  }
  if (f && f->combination.condition() > cancellation_limit) f.reset();
  if (f) {
    auto v = f->combination.value();
    ev.value = detail::require_finite(v.v, "evaluate");
    ev.derivative = v.d;
    ev.combination = f->combination;
    ev.method = idx.r == 2 ? EvalMethod::Classical : EvalMethod::Fractional;
    ev.trace = f->trace;
    return ev;
  }
  auto o = oracle_legendre_ex(kind, idx, point);
  ev.value = o.value;
  ev.reduced_precision = o.reduced_precision;
  ev.method = EvalMethod::Oracle;
  ev.trace = "hypergeometric series";
  return ev;
}

// ---------------------------------------------------------------------------
// W4 as Whipple, then a homographic (type M) step, then Whipple again.
//
// With coth xi = L4(p) and coth eta = R4(p), x = cosh xi and y = cosh eta
// satisfy (x-1)(y-1) = 4, the M curve continued to p < 0 and reflected, on
// which (2/pi) cos(alpha pi) Qhat_{alpha-1/2}^{-2alpha}(x) = q^{-1/2} P_{alpha-1/2}^{-2alpha}(y), q = (x-1)/2.
// Each field below is the W4(i) left side 2 P(L4) computed along the chain.
struct W4Composition {
  double w4_lhs = 0;        // 2 P_{2a-1/2}^{-a}(L4)
  double via_whipple = 0;   // from Qhat_{a-1/2}^{-2a}(x)
  double via_m = 0;         // from P_{a-1/2}^{-2a}(y)
  double via_whipple2 = 0;  // from Qhat_{2a-1/2}^{-a}(R4): the W4(i) right side
  double w4_rhs = 0;        // A4 (2/pi) Qhat_{2a-1/2}^{-a}(R4) as stated
  double chained_prefactor = 0, stated_prefactor = 0;
};

inline W4Composition w4_composition(double alpha, double p) {
  const IdentityRecord& w4 = identity("W4(i)");
  const IdentityParams q{alpha, 0.0};
  detail::check_params(w4, q);
  if (detail::near_pole(alpha + 0.5) || std::abs(cospi(alpha)) < detail::degenerate_tol)
    throw DegenerateParameterError("W4 composition: cos(alpha pi) or Gamma(alpha+1/2) degenerate");
  const CurvePoint c = curve_point(CurveId::W4, p);
  // coth t = w:  sinh t = 1/sqrt(w^2-1), cosh t = w sinh t, cosh t - 1 = sinh t / (w + sqrt(w^2-1))
  auto hyper = [](double w) {
    const double r = std::sqrt((w - 1.0) * (w + 1.0)), sh = 1.0 / r;
    return std::array<double, 3>{sh, w * sh, sh / (w + r)};
  };
  const auto [sx, x, xm1] = hyper(c.L.v);
  const auto [sy, y, ym1] = hyper(c.R.v);
  (void)ym1;
  const double qm = 0.5 * xm1;
  const double A2 = 1.0 / std::sqrt(sx), A2p = 1.0 / std::sqrt(sy);
  const double g = gamma_fn(alpha + 0.5) / std::sqrt(pi);
  const LegendreIndex i4(2 * alpha - 0.5, -alpha), im(alpha - 0.5, -2 * alpha);

  W4Composition w;
  w.w4_lhs = 2.0 * oracle_legendre(FunctionKind::LegendreP, i4, c.L.v);
  // W2(i-bar) with (alpha, 2 alpha): sqrt2 P(coth xi) = g/A2 (2/pi) cos(alpha pi) Qhat(cosh xi)
  const double k1 = std::sqrt(2.0) * g / A2;
  const double qx = (2.0 / pi) * cospi(alpha) * detail::reference_value(FunctionKind::LegendreQhat, im, x);
  w.via_whipple = k1 * qx;
  // M step: (2/pi) cos(alpha pi) Qhat(x) = q^{-1/2} P(y)
  const double k2 = 1.0 / std::sqrt(qm);
  w.via_m = k1 * k2 * detail::reference_value(FunctionKind::LegendreP, im, y);
  // W2(i) with (alpha, 2 alpha): sqrt2 P(cosh eta) = A2'/g (2/pi) Qhat(coth eta)
  const double k3 = A2p / (std::sqrt(2.0) * g);
  const double qr = (2.0 / pi) * detail::reference_value(FunctionKind::LegendreQhat, i4, c.R.v);
  w.via_whipple2 = k1 * k2 * k3 * qr;
  w.w4_rhs = c.A.v * qr;
  w.chained_prefactor = k1 * k2 * k3;
  w.stated_prefactor = c.A.v;
  return w;
}

}  // namespace fracleg

#endif
