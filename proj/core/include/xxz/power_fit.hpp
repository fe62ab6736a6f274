#pragma once

#include <vector>

namespace xxz {

struct PowerLawFit {
  double exponent = 0.0;
  double amplitude = 0.0;
  double residual = 0.0;                // weighted RMS residual
  std::vector<double> smooth_coeffs;    // c_0..c_d of the smooth background
};

// Least-squares fit of y = sum_{j<=d} c_j x^j + A x^mu over (c_j, A, mu):
// linear solve at fixed mu, outer golden-section refinement of mu after a
// coarse scan. xs must be positive; points are weighted by 1/max(|y|,eps)
// so the fit is relative where the data spans decades.
PowerLawFit fit_power_law(const std::vector<double>& xs,
                          const std::vector<double>& ys, int smooth_degree,
                          double mu_lo = -1.5, double mu_hi = 4.0);

// Joint two-sided variant: y(x) = smooth(x) + (A_+ 1_{x>0} + A_- 1_{x<0})
// |x|^mu with a shared smooth polynomial background. xs may be signed.
struct TwoSidedPowerFit {
  double exponent = 0.0;
  double amp_plus = 0.0;
  double amp_minus = 0.0;
  double residual = 0.0;
  std::vector<double> smooth_coeffs;
};

TwoSidedPowerFit fit_two_sided_power(const std::vector<double>& xs,
                                     const std::vector<double>& ys,
                                     int smooth_degree, double mu_lo = -1.5,
                                     double mu_hi = 4.0);

}  // namespace xxz
