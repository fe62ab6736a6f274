#include "xxz/power_fit.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "xxz/roots.hpp"

namespace xxz {

namespace {

// Weighted linear LS of ys against the columns of basis; returns the RMS
// residual and the coefficients.
double solve_ls(const Eigen::MatrixXd& basis, const Eigen::VectorXd& y,
                const Eigen::VectorXd& w, Eigen::VectorXd& coef) {
  const Eigen::MatrixXd A = w.asDiagonal() * basis;
  const Eigen::VectorXd b = w.asDiagonal() * y;
  coef = A.colPivHouseholderQr().solve(b);
  return std::sqrt((A * coef - b).squaredNorm() / static_cast<double>(y.size()));
}

Eigen::VectorXd rel_weights(const std::vector<double>& ys) {
  Eigen::VectorXd w(static_cast<Eigen::Index>(ys.size()));
  double scale = 0.0;
  for (double y : ys) scale = std::max(scale, std::fabs(y));
  if (scale == 0.0) scale = 1.0;
  for (size_t i = 0; i < ys.size(); ++i)
    w[static_cast<Eigen::Index>(i)] =
        1.0 / std::max(std::fabs(ys[i]), 1e-8 * scale);
  return w;
}

}  // namespace

PowerLawFit fit_power_law(const std::vector<double>& xs,
                          const std::vector<double>& ys, int smooth_degree,
                          double mu_lo, double mu_hi) {
  const int n = static_cast<int>(xs.size());
  const int d = smooth_degree;
  if (n != static_cast<int>(ys.size()))
    throw std::invalid_argument("fit_power_law: size mismatch");
  if (n < d + 4)
    throw std::invalid_argument("fit_power_law: need >= smooth_degree + 4 points");
  for (double x : xs)
    if (x <= 0.0) throw std::invalid_argument("fit_power_law: xs must be > 0");

  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) y[i] = ys[static_cast<size_t>(i)];
  const Eigen::VectorXd w = rel_weights(ys);

  Eigen::MatrixXd basis(n, d + 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= d; ++j)
      basis(i, j) = std::pow(xs[static_cast<size_t>(i)], j);

  Eigen::VectorXd coef;
  auto residual_at = [&](double mu) {
    for (int i = 0; i < n; ++i)
      basis(i, d + 1) = std::pow(xs[static_cast<size_t>(i)], mu);
    return solve_ls(basis, y, w, coef);
  };

  // Coarse scan, then golden-section refinement around the best cell.
  const int scan = 221;
  double best_mu = mu_lo, best_res = residual_at(mu_lo);
  for (int i = 1; i < scan; ++i) {
    const double mu = mu_lo + (mu_hi - mu_lo) * i / (scan - 1.0);
    const double r = residual_at(mu);
    if (r < best_res) {
      best_res = r;
      best_mu = mu;
    }
  }
  const double cell = (mu_hi - mu_lo) / (scan - 1.0);
  const double lo = std::max(mu_lo, best_mu - cell);
  const double hi = std::min(mu_hi, best_mu + cell);
  best_mu = golden_minimize(residual_at, lo, hi, 1e-10);

  PowerLawFit fit;
  fit.residual = residual_at(best_mu);
  fit.exponent = best_mu;
  fit.amplitude = coef[d + 1];
  fit.smooth_coeffs.assign(coef.data(), coef.data() + d + 1);
  return fit;
}

TwoSidedPowerFit fit_two_sided_power(const std::vector<double>& xs,
                                     const std::vector<double>& ys,
                                     int smooth_degree, double mu_lo,
                                     double mu_hi) {
  const int n = static_cast<int>(xs.size());
  const int d = smooth_degree;
  if (n != static_cast<int>(ys.size()))
    throw std::invalid_argument("fit_two_sided_power: size mismatch");
  if (n < d + 6)
    throw std::invalid_argument("fit_two_sided_power: too few points");

  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) y[i] = ys[static_cast<size_t>(i)];
  const Eigen::VectorXd w = rel_weights(ys);

  Eigen::MatrixXd basis(n, d + 3);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= d; ++j)
      basis(i, j) = std::pow(xs[static_cast<size_t>(i)], j);

  Eigen::VectorXd coef;
  auto residual_at = [&](double mu) {
    for (int i = 0; i < n; ++i) {
      const double x = xs[static_cast<size_t>(i)];
      const double p = std::pow(std::fabs(x), mu);
      basis(i, d + 1) = (x > 0.0) ? p : 0.0;
      basis(i, d + 2) = (x < 0.0) ? p : 0.0;
    }
    return solve_ls(basis, y, w, coef);
  };

  const int scan = 221;
  double best_mu = mu_lo, best_res = residual_at(mu_lo);
  for (int i = 1; i < scan; ++i) {
    const double mu = mu_lo + (mu_hi - mu_lo) * i / (scan - 1.0);
    const double r = residual_at(mu);
    if (r < best_res) {
      best_res = r;
      best_mu = mu;
    }
  }
  const double cell = (mu_hi - mu_lo) / (scan - 1.0);
  best_mu = golden_minimize(residual_at, std::max(mu_lo, best_mu - cell),
                            std::min(mu_hi, best_mu + cell), 1e-10);

  TwoSidedPowerFit fit;
  fit.residual = residual_at(best_mu);
  fit.exponent = best_mu;
  fit.amp_plus = coef[d + 1];
  fit.amp_minus = coef[d + 2];
  fit.smooth_coeffs.assign(coef.data(), coef.data() + d + 1);
  return fit;
}

}  // namespace xxz
