#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace xxz {

// One-dimensional beta-like integral case: constant-exponent specialization
// of the smooth class, G(lambda, u, v) = G1 * delta_+ * delta_-.
struct AsymCase1D {
  std::function<double(double)> z_plus, z_minus;
  double zp_plus = 0.0, zp_minus = 0.0;  // z'_{+-}(lambda0)
  double delta_plus = 0.5, delta_minus = 0.5;
  double G1 = 1.0;          // smooth-class leading value at lambda0
  double lambda0 = 0.0;     // common simple zero of z_+-
  double a = -1.0, b = 1.0; // integration interval J

  // z_+- (lambda) = s_+- * (lambda - lambda0) on [a, b].
  static AsymCase1D affine(double s_plus, double s_minus, double d_plus,
                           double d_minus, double lambda0 = 0.0,
                           double a = -1.0, double b = 1.0);
};

// Quadrature of int_J G * prod Xi(z_u + x) [z_u + x]^(delta_u - 1).
double beta1d_integral(const AsymCase1D& c, double x, double rel_tol = 1e-11);

// Leading small-x term per the one-dimensional asymptotic theorem
// (case a when z'_+ z'_- < 0, case b when > 0).
double beta1d_prediction(const AsymCase1D& c, double x);

// Auxiliary beta integral J(x) = int_0^delta t^a0 (t + x)^b0 dt: fits the
// singular part across x_grid and compares with the predicted
// (1 + a0 + b0, -sin(pi b0)/pi * Gamma(1+a0)Gamma(1+b0)Gamma(-1-a0-b0)).
struct LemmaAuxReport {
  double fitted_mu = 0.0, fitted_amp = 0.0;
  double predicted_mu = 0.0, predicted_amp = 0.0;
  bool pass_mu = false, pass_amp = false;
};

LemmaAuxReport lemma_beta_aux_check(double a0, double b0, double delta,
                                    const std::vector<double>& x_grid,
                                    double mu_tol = 0.02, double amp_tol = 0.05);

// Gaussian model integral over prod_r R^{n_r} with squared Vandermonde and
// Heaviside-restricted power-law factors.
struct ModelIntegralSpec {
  std::vector<int> n_r;      // per-species multiplicities, sum >= 2
  std::vector<int> eps_r;    // +-1 curvature signs
  std::vector<double> xi_r;  // nonzero couplings
  double u = 0.0, v = 1.0;   // |u| != v, v > 0
  double delta_plus = 0.8, delta_minus = 0.8;

  int ell() const { return static_cast<int>(n_r.size()); }
  int total_n() const;
  double xi_sum() const;  // sum eps_r xi_r^2 n_r
  double theta() const;   // 1/2 sum n_r^2 - 3/2 + delta_+ + delta_-
  bool theta_degenerate() const;  // theta within 1e-6 of a natural number
  void validate() const;
};

struct ValueWithError {
  double value = 0.0;
  double error = 0.0;  // quadrature estimate or MC standard error
};

// Sum n_r = 2: nested adaptive/tanh-sinh quadrature on [-6,6]^2 with the
// inner singular lines located analytically. Sum n_r in {3,4}: antithetic
// Gaussian Monte-Carlo with deterministic per-batch seeding. The result is
// bitwise identical for any worker count (workers <= 0: use all cores).
ValueWithError model_integral(const ModelIntegralSpec& spec, double x,
                              std::uint64_t seed = 1,
                              long long mc_samples = 10'000'000,
                              int workers = 1);

// Leading small-x term of the model integral.
double model_integral_prediction(const ModelIntegralSpec& spec, double x);

// Side weights sin(pi nu_+-)/pi of the model-integral expansion.
void model_integral_side_weights(const ModelIntegralSpec& spec,
                                 double& w_plus, double& w_minus);

struct CheckResult {
  std::string name;
  double predicted = 0.0;
  double computed = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// Euler-beta and Gaudin-Mehta identity checks (quadrature for n <= 2,
// seeded Monte-Carlo at 3 sigma for n = 3).
std::vector<CheckResult> identity_checks(std::uint64_t seed = 1);

}  // namespace xxz
