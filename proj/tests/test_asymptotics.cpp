#include <cmath>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "xxz/asymptotics.hpp"
#include "xxz/power_fit.hpp"

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  const int n =
      static_cast<int>(std::lround(per_decade * std::log10(hi / lo))) + 1;
  std::vector<double> xs(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    xs[static_cast<size_t>(i)] = lo * std::pow(hi / lo, double(i) / (n - 1));
  return xs;
}
}  // namespace

TEST_CASE("case a: quadrature equals the closed form") {
  for (double dp : {0.3, 0.7, 1.2})
    for (double dm : {0.4, 0.9}) {
      const auto c = xxz::AsymCase1D::affine(1.3, -0.7, dp, dm);
      const double pred = xxz::beta1d_prediction(c, 0.37);
      const double got = xxz::beta1d_integral(c, 0.37);
      CHECK(std::fabs(got - pred) < 1e-6 * std::fabs(pred));
    }
}

TEST_CASE("case b: frozen two-sided amplitudes") {
  const auto c = xxz::AsymCase1D::affine(1.3, 0.4, 0.3, 0.4);
  std::vector<double> xs, ys;
  for (double ax : log_grid(1e-5, 1e-3, 12))
    for (int side : {+1, -1}) {
      xs.push_back(side * ax);
      ys.push_back(xxz::beta1d_integral(c, side * ax));
    }
  const auto fit = xxz::fit_two_sided_power(xs, ys, 1, -0.9, 1.5);
  CHECK(std::fabs(fit.exponent - (-0.3)) < 0.02 * 0.3);
  // Frozen predictions from the closed-form side amplitudes.
  CHECK(std::fabs(fit.amp_plus - 0.8821866) < 2e-5);
  CHECK(std::fabs(fit.amp_minus - 0.7504327) < 2e-5);
  CHECK(std::fabs(fit.amp_plus / fit.amp_minus - 1.175571) < 0.03 * 1.175571);
}

TEST_CASE("regular case: no singular part across x = 0") {
  // Both Heaviside arguments stay positive on [a,b]: the integral is smooth
  // in x, so second divided differences stay bounded as the step shrinks.
  xxz::AsymCase1D c = xxz::AsymCase1D::affine(1.0, -1.0, 0.3, 0.4);
  c.z_plus = [](double lam) { return lam + 3.0; };
  c.z_minus = [](double lam) { return 4.0 - lam; };
  double d2_large = 0.0, d2_small = 0.0;
  for (double h : {1e-2, 1e-4}) {
    const double d2 = (xxz::beta1d_integral(c, h) -
                       2.0 * xxz::beta1d_integral(c, 0.0) +
                       xxz::beta1d_integral(c, -h)) /
                      (h * h);
    (h == 1e-2 ? d2_large : d2_small) = d2;
  }
  CHECK(std::fabs(d2_small) < 10.0 * (std::fabs(d2_large) + 1.0));
}

TEST_CASE("auxiliary lemma: fitted exponent and amplitude") {
  const auto xs = log_grid(1e-4, 1e-2, 12);
  {
    const auto rep = xxz::lemma_beta_aux_check(-0.3, -0.4, 0.5, xs);
    CHECK(rep.pass_mu);
    CHECK(rep.pass_amp);
    CHECK(std::fabs(rep.predicted_mu - 0.3) < 1e-12);
    CHECK(std::fabs(rep.predicted_amp - (-2.532051)) < 1e-5);
  }
  {
    const auto rep = xxz::lemma_beta_aux_check(0.2, -0.6, 0.5, xs);
    CHECK(rep.pass_mu);
    CHECK(rep.pass_amp);
    CHECK(std::fabs(rep.predicted_mu - 0.6) < 1e-12);
    CHECK(std::fabs(rep.predicted_amp - (-2.279362)) < 1e-5);
  }
}

TEST_CASE("model integral: frozen quadrature values") {
  xxz::ModelIntegralSpec s;
  s.n_r = {2};
  s.eps_r = {1};
  s.xi_r = {1.0};
  s.u = 0.3;
  s.v = 1.0;
  s.delta_plus = 0.8;
  s.delta_minus = 0.8;
  CHECK(std::fabs(s.theta() - 2.1) < 1e-14);
  CHECK(std::fabs(xxz::model_integral(s, 0.01).value - 2.225359879976156) <
        1e-6);
  CHECK(std::fabs(xxz::model_integral(s, -0.01).value - 2.183664093741) <
        1e-8);
  s.delta_plus = 0.3;
  s.delta_minus = 0.4;
  CHECK(std::fabs(xxz::model_integral(s, 0.01).value - 6.120491697305) <
        1e-8);
  CHECK(std::fabs(xxz::model_integral(s, -0.01).value - 6.331026578642) <
        1e-8);
}

TEST_CASE("model integral: side weights") {
  xxz::ModelIntegralSpec s;
  s.n_r = {2};
  s.eps_r = {1};
  s.xi_r = {1.0};
  s.u = 0.3;
  s.v = 1.0;
  s.delta_plus = 0.8;
  s.delta_minus = 0.8;
  double wp = 0.0, wm = 0.0;
  xxz::model_integral_side_weights(s, wp, wm);
  CHECK(std::fabs(wp - std::sin(1.6 * kPi) / kPi) < 1e-12);
  CHECK(std::fabs(wm - std::sin(1.5 * kPi) / kPi) < 1e-12);
  s.delta_plus = 0.3;
  s.delta_minus = 0.4;
  xxz::model_integral_side_weights(s, wp, wm);
  CHECK(std::fabs(wp / wm - (-0.809017)) < 1e-5);
  s.u = 1.5;
  xxz::model_integral_side_weights(s, wp, wm);
  CHECK(std::fabs(wp / wm - (-1.618034)) < 1e-5);
}

TEST_CASE("model integral: monotone in x when delta = 1") {
  xxz::ModelIntegralSpec s;
  s.n_r = {2};
  s.eps_r = {1};
  s.xi_r = {1.0};
  s.u = 0.3;
  s.v = 1.0;
  s.delta_plus = 1.0;
  s.delta_minus = 1.0;
  double prev = -1e300;
  for (double x : {-0.5, -0.1, 0.0, 0.1, 0.5}) {
    const double v = xxz::model_integral(s, x).value;
    CHECK(v >= prev - 1e-9);
    CHECK(v >= 0.0);
    prev = v;
  }
}

TEST_CASE("model integral MC: determinism and worker independence") {
  xxz::ModelIntegralSpec s;
  s.n_r = {1, 1, 1};
  s.eps_r = {1, 1, -1};
  s.xi_r = {1.0, 0.7, 0.5};
  s.u = 0.3;
  s.v = 1.0;
  s.delta_plus = 0.6;
  s.delta_minus = 0.6;
  const auto a = xxz::model_integral(s, 0.05, 7, 400000, 1);
  const auto b = xxz::model_integral(s, 0.05, 7, 400000, 3);
  CHECK(a.value == b.value);  // bitwise, by construction
  CHECK(a.error == b.error);
  CHECK(a.error > 0.0);
  const auto c = xxz::model_integral(s, 0.05, 8, 400000, 1);
  CHECK(c.value != a.value);
  CHECK(std::fabs(c.value - a.value) < 6.0 * (a.error + c.error));
}

TEST_CASE("model integral: refusals") {
  xxz::ModelIntegralSpec s;
  s.n_r = {1, 1, 1};
  s.eps_r = {1, 1, -1};
  s.xi_r = {1.0, 0.7, 0.5};
  s.delta_plus = 0.1;  // too singular for plain MC
  s.delta_minus = 0.6;
  CHECK_THROWS_AS((void)xxz::model_integral(s, 0.05, 1, 100000),
                  std::domain_error);
  xxz::ModelIntegralSpec big;
  big.n_r = {3, 2};
  big.eps_r = {1, -1};
  big.xi_r = {1.0, 0.5};
  CHECK_THROWS_AS((void)xxz::model_integral(big, 0.05),
                  std::invalid_argument);
  // Degenerate theta (natural number) flags the prediction.
  xxz::ModelIntegralSpec deg;
  deg.n_r = {2};
  deg.eps_r = {1};
  deg.xi_r = {1.0};
  deg.delta_plus = 0.7;
  deg.delta_minus = 0.8;  // theta = 2 - 3/2 + 1.5 = 2, a natural number
  CHECK(deg.theta_degenerate());
  CHECK_THROWS_AS((void)xxz::model_integral_prediction(deg, 0.01),
                  std::domain_error);
}

TEST_CASE("identity suite") {
  for (const auto& c : xxz::identity_checks(1)) {
    INFO(c.name);
    CHECK(c.pass);
  }
}
