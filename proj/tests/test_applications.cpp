#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <boost/math/quadrature/trapezoidal.hpp>

#include "fracleg/applications.hpp"

using namespace fracleg;

namespace {
double rel(double a, double b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

// (1/2pi) int_0^{2pi} f(phi) cos(m phi) dphi, periodic trapezoid
template <class F>
double mean_cos(F f, int m) {
  auto g = [&](double p) { return f(p) * std::cos(m * p); };
  return boost::math::quadrature::trapezoidal(g, 0.0, 2 * pi, 1e-14, 20) / (2 * pi);
}
}  // namespace

TEST_CASE("binomial cases") {
  for (double x : {0.1, 0.5, 0.9}) {
    CAPTURE(x);
    CHECK(std::abs(fourier_coefficient({1, 0, x}) - 1) < 1e-12);
    CHECK(std::abs(fourier_coefficient({1, 1, x}) - x / 2) < 1e-12);
    CHECK(std::abs(fourier_coefficient({1, 2, x})) < 1e-12);
    CHECK(std::abs(fourier_coefficient({2, 0, x}) - (1 + x * x / 2)) < 1e-12);
    CHECK(std::abs(fourier_coefficient({2, 1, x}) - x) < 1e-12);
    CHECK(std::abs(fourier_coefficient({2, 2, x}) - x * x / 4) < 1e-12);
  }
}

TEST_CASE("fractional exponent against frozen quadrature") {
  CHECK(rel(fourier_coefficient({-0.25, 2, 0.6}), 0.01821838893699591) < 1e-12);  // mpmath quad
}

TEST_CASE("coefficients are even in m") {
  for (int m = 1; m <= 5; ++m)
    CHECK(fourier_coefficient({-1.0 / 3, m, 0.7}) == fourier_coefficient({-1.0 / 3, -m, 0.7}));
}

TEST_CASE("Parseval: sum c_m^2 is the constant term of the square") {
  for (double nu : {-0.5, -1.0 / 6, 0.25, 1.5}) {
    const double x = 0.5;
    double s = 0;
    for (int m = -25; m <= 25; ++m) s += std::pow(fourier_coefficient({nu, m, x}), 2);
    CAPTURE(nu);
    CHECK(rel(s, fourier_coefficient({2 * nu, 0, x})) < 1e-12);
  }
}

TEST_CASE("Fourier coefficients against quadrature") {
  for (double nu : {-0.75, -0.25, -1.0 / 6, 1.0 / 3, 2.5})
    for (double x : {0.2, 0.6, 0.95})
      for (int m = 0; m <= 4; ++m) {
        const double q = mean_cos([&](double p) { return std::pow(1 + x * std::cos(p), nu); }, m);
        CAPTURE(nu);
        CAPTURE(x);
        CAPTURE(m);
        CHECK(std::abs(fourier_coefficient({nu, m, x}) - q) < 1e-10 * (1 + std::abs(q)));
      }
}

TEST_CASE("Laplace coefficients") {
  // (4/pi) K(alpha^2) for s = 1/2, m = 0
  for (double a : {0.1, 0.4, 0.8})
    CHECK(rel(laplace_coefficient(0.5, 0, a), 4 / pi * complete_elliptic_k(a * a)) < 1e-12);
  CHECK(rel(laplace_coefficient(0.5, 0, 0.4), 2.0881126825790579) < 1e-12);  // mpmath quad
  CHECK(rel(laplace_coefficient(1.5, 2, 0.3), 0.3982561885673358) < 1e-12);
  for (double s : {0.5, 1.5, 1.0 / 3})
    for (int m = 0; m <= 5; ++m)
      for (double a : {0.05, 0.3, 0.7}) {
        const double q =
            2 * mean_cos([&](double p) { return std::pow(1 + a * a - 2 * a * std::cos(p), -s); }, m);
        CAPTURE(s);
        CAPTURE(m);
        CAPTURE(a);
        CHECK(laplace_coefficient(s, m, a) > 0);
        CHECK(std::abs(laplace_coefficient(s, m, a) - q) < 1e-9 * (1 + std::abs(q)));
      }
}

TEST_CASE("convention string") {
  const std::string c = laplace_convention;
  CHECK(c.find("(1/pi) int_0^{2pi} cos(m phi)") != std::string::npos);
}

TEST_CASE("application errors") {
  CHECK_THROWS_AS(fourier_coefficient({0.5, 1, 1.0}), DomainError);
  CHECK_THROWS_AS(fourier_coefficient({0.5, 1, 0.0}), DomainError);
  CHECK_THROWS_AS(fourier_coefficient({-2, 2, 0.5}), PoleError);
  CHECK_THROWS_AS(laplace_coefficient(0.5, 0, 1.0), DomainError);
  CHECK_THROWS_AS(laplace_coefficient(-0.5, 0, 0.5), DomainError);
  CHECK_THROWS_AS(laplace_coefficient(0.5, -1, 0.5), DomainError);
}
