#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fracleg/kernel.hpp"

using namespace fracleg;
using K = FunctionKind;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }
double point_for(K k, int i) { return is_ferrers(k) ? -0.9 + 0.3 * i : 1.1 + 0.7 * i * i; }
}  // namespace

TEST_CASE("half-degree representations") {
  for (double xi : {0.1, 0.8, 2.0, 5.0}) {
    const double z = std::cosh(xi), t = std::tanh(xi / 2);
    CHECK(rel(base_half_degree(K::LegendreP, z).value().v,
              (2 / pi) / std::cosh(xi / 2) * complete_elliptic_k(t * t)) < 1e-14);
    CHECK(rel(base_half_degree(K::LegendreQhat, z).value().v,
              2 * std::exp(-xi / 2) * complete_elliptic_k(std::exp(-2 * xi))) < 1e-14);
  }
  for (double th : {0.1, 1.0, 2.0, 3.0}) {
    const double x = std::cos(th), s = std::sin(th / 2), c = std::cos(th / 2);
    CHECK(rel(base_half_degree(K::FerrersP, x).value().v, (2 / pi) * complete_elliptic_k(s * s)) < 1e-14);
    CHECK(rel(base_half_degree(K::FerrersQ, x).value().v, complete_elliptic_k(c * c)) < 1e-14);
  }
  CHECK(rel(base_half_degree(K::FerrersP, 0.0).value().v, (2 / pi) * 1.8540746773013719) < 1e-15);
}

TEST_CASE("unified base agrees with the half-degree base") {
  for (K k : {K::LegendreP, K::LegendreQhat, K::FerrersP, K::FerrersQ})
    for (int i = 0; i < 7; ++i) {
      const double x = point_for(k, i);
      auto a = base_half_degree(k, x).value(), b = base_unified(k, x).value();
      CAPTURE(kind_name(k));
      CAPTURE(x);
      CHECK(rel(b.v, a.v) < 1e-13);
      CHECK(std::abs(b.d - a.d) <= 1e-12 * (1 + std::abs(a.d)));
    }
}

TEST_CASE("classical evaluation against the oracle, error bounded by the condition") {
  long n = 0;
  for (K k : {K::LegendreP, K::LegendreQhat, K::FerrersP, K::FerrersQ})
    for (int twonu = -7; twonu <= 7; twonu += 2)
      for (int m = -3; m <= 3; ++m)
        for (int i = 0; i < 7; ++i) {
          const double x = point_for(k, i);
          const LegendreIndex idx(twonu / 2.0, m);
          if (needs_qhat_normalization(k) && idx.nu + m + 1 <= 0 && twonu % 2 == 0) continue;
          auto c = eval_classical(k, idx, x);
          const double v = c.value().v, o = oracle_legendre(k, idx, x);
          CAPTURE(kind_name(k));
          CAPTURE(idx.nu);
          CAPTURE(m);
          CAPTURE(x);
          CHECK(std::abs(v - o) <= 1e-12 * c.condition() * std::abs(o) + 1e-300);
          ++n;
        }
  CHECK(n > 1500);
}

TEST_CASE("reference_value stays accurate where the ladder cancels") {
  // high order, upward degree: condition well above the limit
  for (double z : {1.3, 3.0, 30.0}) {
    const LegendreIndex idx(9.5, 6);
    auto c = eval_classical(K::LegendreQhat, idx, z);
    const double o = oracle_legendre(K::LegendreQhat, idx, z);
    if (c.condition() > cancellation_limit) {
      CHECK(detail::reference_value(K::LegendreQhat, idx, z) == o);
    }
    CHECK(rel(detail::reference_value(K::LegendreQhat, idx, z), o) < 1e-9);
  }
}

TEST_CASE("classical evaluation refuses other indices") {
  CHECK_THROWS_AS(eval_classical(K::LegendreP, LegendreIndex(1.0 / 3, 0), 2.0), UnsupportedIndexError);
  CHECK_THROWS_AS(eval_classical(K::LegendreP, LegendreIndex(-0.5, 0.5), 2.0), UnsupportedIndexError);
  CHECK_THROWS_AS(eval_classical(K::LegendreP, LegendreIndex(20.5, 0), 2.0), StabilityError);
  CHECK_THROWS_AS(eval_classical(K::FerrersP, LegendreIndex(0.5, 0), 2.0), DomainError);
}

TEST_CASE("order ladder up then down is the identity") {
  for (K k : {K::LegendreP, K::LegendreQhat, K::FerrersP, K::FerrersQ, K::FerrersPbar}) {
    const double x = is_ferrers(k) ? 0.35 : 2.4;
    const LegendreIndex idx(1.0 / 3, 0.25);
    LadderState<Dual> s{Dual(0.8, -0.3), idx};
    auto up = ladder_order(k, s, 1, x);
    CHECK(up.idx.mu == doctest::Approx(1.25));
    auto back = ladder_order(k, up, -1, x);
    CAPTURE(kind_name(k));
    CHECK(back.value.v == doctest::Approx(0.8).epsilon(1e-13));
    CHECK(back.value.d == doctest::Approx(-0.3).epsilon(1e-12));
  }
}

TEST_CASE("ladders move the oracle to the neighbouring index") {
  // value and derivative with respect to xi / theta, from the oracle
  auto state = [](K k, const LegendreIndex& idx, double x) {
    const double h = 1e-5;
    const bool f = is_ferrers(k);
    const double t = f ? std::acos(x) : std::acosh(x);
    auto at = [&](double s) { return oracle_legendre(k, idx, f ? std::cos(s) : std::cosh(s)); };
    return LadderState<Dual>{Dual(at(t), (at(t + h) - at(t - h)) / (2 * h)), idx};
  };
  for (K k : {K::LegendreP, K::LegendreQhat, K::FerrersP, K::FerrersQ}) {
    const double x = is_ferrers(k) ? 0.4 : 1.8;
    const LegendreIndex idx(0.3, 0.45);
    for (int dir : {1, -1}) {
      CAPTURE(kind_name(k));
      CAPTURE(dir);
      auto o = ladder_order(k, state(k, idx, x), dir, x);
      CHECK(rel(o.value.v, oracle_legendre(k, o.idx, x)) < 1e-8);
      auto d = ladder_degree(k, state(k, idx, x), dir, x);
      CHECK(rel(d.value.v, oracle_legendre(k, d.idx, x)) < 1e-8);
    }
  }
}

TEST_CASE("singular ladders") {
  LadderState<Dual> s{Dual(1.0, 0.0), LegendreIndex(-0.5, 0.5)};
  CHECK_THROWS_AS(ladder_order(K::LegendreP, s, -1, 2.0), SingularLadderError);
  LadderState<Dual> t{Dual(1.0, 0.0), LegendreIndex(0.25, 1.25)};  // bracket -(nu+1/2) + (mu-1/2) = 0
  CHECK_THROWS_AS(ladder_degree(K::LegendreP, t, 1, 2.0), SingularLadderError);
  CHECK_THROWS_AS(ladder_order(K::LegendreP, s, 2, 2.0), DomainError);
  CHECK_THROWS_AS(ladder_order(K::LegendrePtilde, s, 1, 2.0), DomainError);
}

TEST_CASE("pbar routes agree") {
  for (double x : {-0.8, -0.1, 0.5, 0.9})
    for (double mu : {-1.0, 0.0, 2.0}) {
      const LegendreIndex idx(-0.5, mu);
      auto r = aux_barp_routes(idx, x);
      CHECK(rel(r.combination, r.reflection) < 1e-11);
      CHECK(aux_barp(idx, x) == r.reflection);
    }
}

TEST_CASE("ptilde matches the oracle definition") {
  for (double z : {1.2, 2.0, 7.0}) {
    const LegendreIndex idx(-0.5, 1);
    CHECK(rel(aux_tildep(idx, z), oracle_legendre(K::LegendrePtilde, idx, z)) < 1e-12);
    // integer nu + mu: P~ = cos[(nu+mu) pi] P
    const LegendreIndex j(1.0 / 3, 2.0 / 3);
    CHECK(rel(aux_tildep(j, z), -oracle_legendre(K::LegendreP, j, z)) < 1e-12);
  }
}

TEST_CASE("degree reflection") {
  for (K k : {K::LegendreQhat, K::FerrersQ})
    for (double nu : {-1.0 / 3, 0.25, 1.6}) {
      const double x = k == K::FerrersQ ? 0.3 : 2.5;
      const LegendreIndex idx(nu, 0.4);
      CAPTURE(kind_name(k));
      CAPTURE(nu);
      CHECK(rel(reflect_degree(k, idx, x), oracle_legendre(k, LegendreIndex(-nu - 1, 0.4), x)) < 1e-10);
    }
  CHECK_THROWS_AS(reflect_degree(K::FerrersQ, LegendreIndex(0.25, 1.25), 0.3), DegenerateReflectionError);
  CHECK_THROWS_AS(reflect_degree(K::LegendreP, LegendreIndex(0.25, 0.5), 2.0), DomainError);
}
