#include <cmath>
#include <vector>

#include "doctest.h"
#include "xxz/kernels.hpp"
#include "xxz/power_fit.hpp"
#include "xxz/quadrature.hpp"

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
  // int_0^1 t^{-1/2} dt = 2
  const double v =
      xxz::tanh_sinh([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0);
  CHECK(std::fabs(v - 2.0) < 1e-12);
  // Euler beta(1/2, 1/2) = pi, singular at both ends; the offset form keeps
  // full relative precision at the endpoints.
  const double b = xxz::tanh_sinh_offsets(
      [](double da, double db) {
        return std::pow(da, -0.5) * std::pow(db, -0.5);
      },
      0.0, 1.0, 1e-13);
  CHECK(std::fabs(b - kPi) < 1e-10);
}

TEST_CASE("tanh-sinh smooth integrand") {
  const double v = xxz::tanh_sinh([](double t) { return std::cos(t); }, 0.0,
                                  1.0);
  CHECK(std::fabs(v - std::sin(1.0)) < 1e-13);
}

TEST_CASE("power-law fit recovers pure laws") {
  std::vector<double> xs, ys;
  for (int i = 0; i < 25; ++i) {
    const double x = 1e-4 * std::pow(100.0, i / 24.0);
    xs.push_back(x);
    ys.push_back(2.0 * std::pow(x, 0.7));
  }
  const auto fit = xxz::fit_power_law(xs, ys, 0);
  CHECK(std::fabs(fit.exponent - 0.7) < 1e-6);
  CHECK(std::fabs(fit.amplitude - 2.0) < 1e-6);
}

TEST_CASE("power-law fit with smooth background") {
  std::vector<double> xs, ys;
  for (int i = 0; i < 30; ++i) {
    const double x = 1e-3 * std::pow(100.0, i / 29.0);
    xs.push_back(x);
    ys.push_back(1.0 + x + 3.0 * std::pow(x, 1.4));
  }
  const auto fit = xxz::fit_power_law(xs, ys, 1);
  CHECK(std::fabs(fit.exponent - 1.4) < 1e-4);
  CHECK(std::fabs(fit.amplitude - 3.0) < 1e-4);
}

TEST_CASE("power-law fit under controlled contamination") {
  std::vector<double> xs, ys;
  for (int i = 0; i < 25; ++i) {
    const double x = 1e-4 * std::pow(100.0, i / 24.0);
    xs.push_back(x);
    ys.push_back(std::pow(x, 2.5) * (1.0 + 0.1 * x));
  }
  const auto fit = xxz::fit_power_law(xs, ys, 0);
  CHECK(std::fabs(fit.exponent - 2.5) < 0.01);
}

TEST_CASE("Barnes G small integers") {
  CHECK(xxz::barnes_G(1) == doctest::Approx(1.0));
  CHECK(xxz::barnes_G(2) == doctest::Approx(1.0));
  CHECK(xxz::barnes_G(3) == doctest::Approx(1.0));
  CHECK(xxz::barnes_G(4) == doctest::Approx(2.0));
  CHECK(xxz::barnes_G(5) == doctest::Approx(12.0));
}

TEST_CASE("Gaudin-Mehta closed values") {
  CHECK(std::fabs(xxz::gaudin_mehta_value(1) - std::sqrt(kPi)) < 1e-14);
  CHECK(std::fabs(xxz::gaudin_mehta_value(2) - kPi) < 1e-13);
  // n = 3 frozen from an independent Monte-Carlo oracle run.
  CHECK(std::fabs(xxz::gaudin_mehta_value(3) - 8.3524919952) < 1e-6);
}
