#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "fracleg/transforms.hpp"

using namespace fracleg;
using K = FunctionKind;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }
}  // namespace

TEST_CASE("catalogue holds 34 distinct labels") {
  const auto& c = catalogue();
  CHECK(c.size() == 34);
  std::set<std::string> labels;
  for (const auto& r : c) labels.insert(r.label);
  CHECK(labels.size() == 34);
  CHECK(find_identity("I6(i-bar)") != nullptr);
  CHECK(find_identity("I5(i)") == nullptr);
  CHECK_THROWS_AS(identity("nope"), DomainError);
}

TEST_CASE("selected identities close on their grids") {
  struct Case {
    const char* label;
    IdentityParams q;
  };
  const Case cases[] = {{"I6(i)", {0.2, 0}},     {"I6(i)", {1.0, 0}},      {"I4(ii-bar)", {-0.2, 0}},
                        {"I3(i)", {0, 0}},        {"M(ii)", {2.0, 0}},      {"W2(i)", {0.2, -0.2}},
                        {"W2(i-bar)", {1.0, 0.2}}, {"W4(i-bar)", {0.2, 0}}, {"X(i)", {0, 0}},
                        {"X(ii)", {0, 0}},        {"I6(i-bar)", {0.25, 0}}, {"I4(i-bar)", {0.3, 0}}};
  for (const auto& c : cases) {
    const auto& rec = identity(c.label);
    for (double p : identity_grid(rec, 25)) {
      auto ev = identity_sides(rec, c.q, p);
      CAPTURE(c.label);
      CAPTURE(c.q.alpha);
      CAPTURE(p);
      CHECK(ev.gap <= 1e-9);
    }
  }
}

TEST_CASE("M(i-bar) at alpha = 1/2 is degenerate") {
  const auto& rec = identity("M(i-bar)");
  CHECK_THROWS_AS(identity_sides(rec, {0.5, 0}, identity_grid(rec, 5)[2]), DegenerateParameterError);
  CHECK_THROWS_AS(verify_identity(rec, 5, {0.5}, {}), DegenerateParameterError);
}

TEST_CASE("parameter and interval checks") {
  const auto& i3 = identity("I3(i)");
  CHECK_THROWS_AS(identity_sides(i3, {0.2, 0}, identity_grid(i3, 5)[2]), DomainError);
  const auto& i6 = identity("I6(i)");
  CHECK_THROWS_AS(identity_sides(i6, {0.2, 0.1}, identity_grid(i6, 5)[2]), DomainError);
  const auto row = interval_row(i6.curve, i6.row);
  CHECK_THROWS_AS(identity_sides(i6, {0.2, 0}, row.p_lo - 0.5), DomainError);
  CHECK_THROWS_AS(identity_grid(i6, 1), DomainError);
}

TEST_CASE("Ptilde does not satisfy I6(i-bar) away from alpha = 0") {
  // at (-1/6, -1/4) the catalogue side (boundary mean of P) closes,
  // cos[(nu+mu)pi] P - (2/pi) cos(mu pi) sin[(nu+mu)pi] Qhat does not
  const auto& rec = identity("I6(i-bar)");
  const IdentityParams q{0.25, 0};
  double worst_tilde = 0, worst_rec = 0;
  for (double p : identity_grid(rec, 10)) {
    auto ev = identity_sides(rec, q, p);
    const double tilde = 2.0 * aux_tildep(LegendreIndex(-1.0 / 6, -0.25), ev.L);
    worst_tilde = std::max(worst_tilde, std::abs(tilde - ev.rhs) / (1 + std::abs(ev.rhs)));
    worst_rec = std::max(worst_rec, ev.gap);
  }
  CHECK(worst_rec <= 1e-9);
  CHECK(worst_tilde > 1e-2);
  // at alpha = 0 the two agree: cos(nu pi) P - (2/pi) sin(nu pi) Qhat
  const double z = 1.7;
  const double mean = std::cos(pi / 6) * oracle_legendre(K::LegendreP, LegendreIndex(-1.0 / 6, 0), z) +
                      (2 / pi) * std::sin(pi / 6) * oracle_legendre(K::LegendreQhat, LegendreIndex(-1.0 / 6, 0), z);
  CHECK(rel(aux_tildep(LegendreIndex(-1.0 / 6, 0), z), mean) < 1e-13);
}

TEST_CASE("fractional reduction against the oracle; combinations recompose") {
  long n = 0;
  for (int r : {3, 4, 6})
    for (int sign : {1, -1})
      for (int nn = -2; nn <= 2; ++nn)
        for (int m = -2; m <= 2; ++m)
          for (K k : {K::LegendreP, K::LegendreQhat, K::FerrersP, K::FerrersQ})
            for (int i = 0; i < 4; ++i) {
              const double x = is_ferrers(k) ? -0.75 + 0.5 * i : 1.05 + 1.3 * i;
              const auto idx = LegendreIndex::exact(Rational(nn * r + sign, r), Rational(m));
              if (needs_qhat_normalization(k) && idx.nu + m + 1 <= 0 &&
                  std::abs(idx.nu + m - std::round(idx.nu + m)) < 1e-12)
                continue;
              auto f = eval_fractional(k, idx, x);
              const auto b = f.combination.basis();
              const double v = f.value();
              CHECK(f.combination.value(b).v == v);
              const double sum = f.combination.k.v * b.K + f.combination.e.v * b.E + f.combination.kc.v * b.Kc +
                                 f.combination.ec.v * b.Ec;
              CHECK(std::abs(sum - v) <= 1e-14 * std::abs(v) * f.combination.condition(b) + 1e-300);
              const double o = oracle_legendre(k, idx, x);
              CAPTURE(kind_name(k));
              CAPTURE(idx.nu);
              CAPTURE(m);
              CAPTURE(x);
              CHECK(std::abs(v - o) <= std::max(1e-12, 1e-12 * f.combination.condition(b)) * std::abs(o));
              ++n;
            }
  CHECK(n > 2000);
}

TEST_CASE("fractional reduction rejects other indices") {
  CHECK_THROWS_AS(eval_fractional(K::LegendreP, LegendreIndex(0.2, 1), 2.0), UnsupportedIndexError);
  CHECK_THROWS_AS(eval_fractional(K::LegendreP, LegendreIndex::exact(Rational(-1, 3), Rational(1, 2)), 2.0),
                  UnsupportedIndexError);
  CHECK_THROWS_AS(eval_fractional(K::LegendreP, LegendreIndex::exact(Rational(-34, 3), Rational(0)), 2.0),
                  StabilityError);
  CHECK_THROWS_AS(eval_fractional(K::LegendrePtilde, LegendreIndex::exact(Rational(-1, 3), Rational(0)), 2.0),
                  DomainError);
}

TEST_CASE("evaluate picks its route") {
  auto a = evaluate(K::LegendreP, LegendreIndex::exact(Rational(-1, 4), Rational(0)), 1.5);
  CHECK(a.method == EvalMethod::Fractional);
  CHECK(a.trace.find("I4(i)") != std::string::npos);
  CHECK(a.combination.has_value());
  CHECK(rel(a.value, oracle_legendre(K::LegendreP, LegendreIndex(-0.25, 0), 1.5)) < 1e-13);

  auto b = evaluate(K::FerrersQ, LegendreIndex::exact(Rational(3, 2), Rational(-1)), 0.3);
  CHECK(b.method == EvalMethod::Classical);

  auto c = evaluate(K::FerrersP, LegendreIndex::exact(Rational(1, 5), Rational(0)), 0.3);
  CHECK(c.method == EvalMethod::Oracle);
  CHECK(!c.derivative);

  auto d = evaluate(K::FerrersPbar, LegendreIndex::exact(Rational(-1, 6), Rational(2)), 0.4);
  CHECK(rel(d.value, oracle_legendre(K::FerrersP, LegendreIndex(-1.0 / 6, 2), -0.4)) < 1e-12);

  auto e = evaluate(K::LegendrePtilde, LegendreIndex::exact(Rational(-1, 3), Rational(1)), 2.2);
  CHECK(rel(e.value, oracle_legendre(K::LegendrePtilde, LegendreIndex(-1.0 / 3, 1), 2.2)) < 1e-12);
}

TEST_CASE("evaluate derivative is d/dxi") {
  const auto idx = LegendreIndex::exact(Rational(2, 3), Rational(1));
  const double xi = 0.9, h = 1e-5;
  auto ev = evaluate(K::LegendreQhat, idx, std::cosh(xi));
  REQUIRE(ev.derivative);
  const double fd = (oracle_legendre(K::LegendreQhat, idx, std::cosh(xi + h)) -
                     oracle_legendre(K::LegendreQhat, idx, std::cosh(xi - h))) / (2 * h);
  CHECK(rel(*ev.derivative, fd) < 1e-8);
}

TEST_CASE("W4 equals the Whipple / M / Whipple chain") {
  for (double alpha : {0.2, -0.2, 1.0}) {
    for (int i = 0; i < 5; ++i) {
      const double p = 1.05 + 0.5 * i;
      auto w = w4_composition(alpha, p);
      CAPTURE(alpha);
      CAPTURE(p);
      CHECK(rel(w.via_whipple, w.w4_lhs) < 1e-9);
      CHECK(rel(w.via_m, w.w4_lhs) < 1e-9);
      CHECK(rel(w.via_whipple2, w.w4_lhs) < 1e-9);
      CHECK(rel(w.chained_prefactor, w.stated_prefactor) < 1e-12);
    }
  }
  CHECK_THROWS_AS(w4_composition(0.5, 2.0), DegenerateParameterError);
}

TEST_CASE("verification CSV") {
  const auto& rec = identity("I6(i)");
  auto rows = verify_identity(rec, 3, {0.2}, {});
  REQUIRE(rows.size() == 3);
  std::ostringstream os;
  write_verification_csv(os, rows);
  std::string first;
  std::istringstream is(os.str());
  std::getline(is, first);
  CHECK(first == "label,alpha,beta,p,L,R,lhs,rhs,gap");
  std::string line;
  std::getline(is, line);
  CHECK(line.rfind("\"I6(i)\",0.20000000000000001,0,", 0) == 0);
}

TEST_CASE("parameter grids follow the constraint") {
  CHECK(parameter_grid(identity("I3(i)"), {0.2, 1}, {}).size() == 1);
  CHECK(parameter_grid(identity("I6(i)"), {0.2, 1}, {3}).size() == 2);
  CHECK(parameter_grid(identity("W2(i)"), {0.2, 1}, {3, 4, 5}).size() == 6);
}
