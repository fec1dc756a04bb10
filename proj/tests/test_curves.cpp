#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fracleg/curves.hpp"

using namespace fracleg;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

bool finite_lr(CurveId id, double p, std::pair<double, double>& out) {
  try {
    out = curve_lr(id, p);
  } catch (const DomainError&) {
    return false;
  }
  return std::isfinite(out.first) && std::isfinite(out.second);
}
}  // namespace

TEST_CASE("names round-trip") {
  for (CurveId id : all_curves) CHECK(parse_curve(curve_name(id)) == id);
  CHECK(!parse_curve("C5"));
}

TEST_CASE("implicit residuals vanish on the parametrization") {
  for (CurveId id : all_curves) {
    if (!has_implicit(id)) continue;
    for (int k = 0; k < 400; ++k) {
      const double p = std::tan(pi * (k + 0.5) / 400 - pi / 2);
      std::pair<double, double> c;
      if (!finite_lr(id, p, c)) continue;
      CAPTURE(curve_name(id));
      CAPTURE(p);
      CHECK(std::abs(implicit_residual_scaled(id, c.first, c.second)) < 1e-12);
    }
  }
  CHECK_THROWS_AS(implicit_residual(CurveId::X, 0.1, 0.2), UnsupportedCurveError);
}

TEST_CASE("implicit residual detects points off the curve") {
  for (CurveId id : all_curves) {
    if (!has_implicit(id)) continue;
    std::pair<double, double> c;
    REQUIRE(finite_lr(id, 1.7, c));
    CAPTURE(curve_name(id));
    CHECK(std::abs(implicit_residual_scaled(id, c.first, c.second * 1.01 + 0.01)) > 1e-6);
  }
}

TEST_CASE("declared symmetries act as stated") {
  for (CurveId id : all_curves)
    for (const auto& s : curve_symmetries(id))
      for (int k = 0; k < 200; ++k) {
        const double p = std::tan(pi * (k + 0.37) / 200 - pi / 2);
        std::pair<double, double> a, b;
        if (!finite_lr(id, p, a) || !finite_lr(id, s.map(p), b)) continue;
        auto want = s.act(a.first, a.second);
        CAPTURE(curve_name(id));
        CAPTURE(s.p_map);
        CAPTURE(p);
        CHECK(std::abs(b.first - want.first) <= 1e-12 * (1 + std::abs(want.first)) * 100);
        CHECK(std::abs(b.second - want.second) <= 1e-12 * (1 + std::abs(want.second)) * 100);
      }
}

TEST_CASE("the multiplier is 1 at the basepoint") {
  for (CurveId id : all_curves) {
    CAPTURE(curve_name(id));
    CHECK(curve_point(id, curve_basepoint(id)).A.v == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("C6 row (1, sqrt3): L from 1 to inf, R from 1 to sqrt3/2") {
  const double s3 = std::sqrt(3.0);
  bool found = false;
  for (const auto& r : interval_rows(CurveId::C6)) {
    if (r.p_lo != 1.0 || std::abs(r.p_hi - s3) > 1e-15) continue;
    found = true;
    CHECK(r.L_at_lo == 1.0);
    CHECK(std::isinf(r.L_at_hi));
    CHECK(r.R_at_lo == 1.0);
    CHECK(r.R_at_hi == doctest::Approx(s3 / 2).epsilon(1e-15));
    auto near_lo = curve_lr(CurveId::C6, 1.0 + 1e-9);
    CHECK(std::abs(near_lo.first - 1.0) < 1e-7);
    CHECK(std::abs(near_lo.second - 1.0) < 1e-8);
    auto near_hi = curve_lr(CurveId::C6, s3 - 1e-9);
    CHECK(near_hi.first > 1e7);
  }
  CHECK(found);
}

TEST_CASE("interval rows: L and R are monotone between the listed ends") {
  for (CurveId id : all_curves)
    for (const auto& r : interval_rows(id)) {
      const double hi = std::isfinite(r.p_hi) ? r.p_hi : r.sweep_hi;
      double prevL = NAN, prevR = NAN;
      int sL = 0, sR = 0;
      for (int k = 1; k < 100; ++k) {
        const double p = r.p_lo + (hi - r.p_lo) * k / 100.0;
        auto c = curve_lr(id, p);
        if (k > 1) {
          int dL = c.first > prevL ? 1 : -1, dR = c.second > prevR ? 1 : -1;
          if (!sL) sL = dL;
          if (!sR) sR = dR;
          CAPTURE(curve_name(id));
          CAPTURE(r.row);
          CHECK(dL == sL);
          CHECK(dR == sR);
        }
        prevL = c.first;
        prevR = c.second;
      }
      CHECK(sL == (r.L_at_hi > r.L_at_lo ? 1 : -1));
      CHECK(sR == (r.R_at_hi > r.R_at_lo ? 1 : -1));
    }
}

TEST_CASE("breakpoint limits") {
  for (CurveId id : all_curves)
    for (const auto& b : breakpoint_table(id)) {
      if (!std::isfinite(b.p)) continue;
      const double d = 1e-9 * std::max(1.0, std::abs(b.p));
      auto check = [&](double q, double L, double R) {
        std::pair<double, double> c;
        if (!finite_lr(id, q, c)) return;
        CAPTURE(curve_name(id));
        CAPTURE(q);
        if (std::isfinite(L)) CHECK(std::abs(c.first - L) < 1e-5 * (1 + std::abs(L)));
        else CHECK(std::abs(c.first) > 1e3);
        if (std::isfinite(R)) CHECK(std::abs(c.second - R) < 1e-5 * (1 + std::abs(R)));
        else CHECK(std::abs(c.second) > 1e3);
      };
      check(b.p - d, b.L_below, b.R_below);
      check(b.p + d, b.L_above, b.R_above);
    }
}

TEST_CASE("parameter_for_L inverts L on a row") {
  for (CurveId id : all_curves)
    for (const auto& r : interval_rows(id)) {
      const double hi = std::isfinite(r.p_hi) ? r.p_hi : r.sweep_hi;
      const double p0 = r.p_lo + 0.37 * (hi - r.p_lo);
      const double L = curve_lr(id, p0).first;
      CAPTURE(curve_name(id));
      CAPTURE(r.row);
      CHECK(parameter_for_L(id, r, L) == doctest::Approx(p0).epsilon(1e-10));
    }
}

TEST_CASE("snapping keeps the point on the curve") {
  // on C6 near p = 0, 1 + L = (18p^4 - 2p^6)/(3-p^2)^3 ~ 1e-12: L carries few digits of it unless snapped
  for (double p0 : {1e-3, 3e-3, 1e-2}) {
    auto s = snap_point(CurveId::C6, p0, true, false);
    const double p = s.p, q = 3 - p * p;
    CAPTURE(p0);
    CHECK(std::abs(s.p - p0) * (8 * std::pow(p0, 3) / 3) < 4e-16);  // a few ulps of L over dL/dp
    CHECK(rel(1.0 + s.L, (18 * std::pow(p, 4) - 2 * std::pow(p, 6)) / (q * q * q)) < 1e-12);
    CHECK(s.R == doctest::Approx(curve_lr(CurveId::C6, s.p).second).epsilon(1e-15));
  }
}

TEST_CASE("curve errors") {
  CHECK_THROWS_AS(curve_point(CurveId::M, NAN), DomainError);
  CHECK_THROWS_AS(interval_row(CurveId::M, "vii"), DomainError);
}
