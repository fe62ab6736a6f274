#include "xxz/kernels.hpp"

#include <cmath>

namespace xxz {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kPoleTol = 1e-12;
}  // namespace

Rapidity operator-(const Rapidity& a, const Rapidity& b) {
  // real - real -> real; shifted - real -> shifted; shifted - shifted -> real
  // (the kernels are even in the sign of the pi/2 shift).
  Branch br = (a.branch == b.branch) ? Branch::real : Branch::shifted;
  return {a.re - b.re, br};
}

double wrap_angle(double eta) {
  double w = eta - kPi * std::floor(eta / kPi);
  if (w < 0.0) w += kPi;
  return w;
}

double kernel_K(const Rapidity& lambda, double eta) {
  const double s = std::sin(eta);
  const double c = std::sin(2.0 * eta);
  const double sh = std::sinh(lambda.re);
  double den;
  if (lambda.branch == Branch::real) {
    den = sh * sh + s * s;
  } else {
    const double ch = std::cosh(lambda.re);
    den = -(ch * ch - s * s);
  }
  if (std::fabs(den) < kPoleTol)
    throw pole_error("kernel_K: evaluation too close to a pole");
  return c / (2.0 * kPi * den);
}

double kernel_K_d1(const Rapidity& lambda, double eta) {
  const double s = std::sin(eta);
  const double c = std::sin(2.0 * eta);
  const double sh2 = std::sinh(2.0 * lambda.re);
  double den;
  if (lambda.branch == Branch::real) {
    const double sh = std::sinh(lambda.re);
    den = sh * sh + s * s;
  } else {
    const double ch = std::cosh(lambda.re);
    den = -(ch * ch - s * s);
  }
  if (std::fabs(den) < kPoleTol)
    throw pole_error("kernel_K_d1: evaluation too close to a pole");
  // K = c/(2 pi den) with den' = sh2 on branch 0 and den' = -sh2 after the
  // sign flip above, so the same expression covers both branches.
  return -c * sh2 / (2.0 * kPi * den * den) *
         (lambda.branch == Branch::real ? 1.0 : -1.0);
}

double kernel_K_d2(const Rapidity& lambda, double eta) {
  const double s = std::sin(eta);
  const double c = std::sin(2.0 * eta);
  const double sh2 = std::sinh(2.0 * lambda.re);
  const double ch2 = std::cosh(2.0 * lambda.re);
  double den, dden;
  if (lambda.branch == Branch::real) {
    const double sh = std::sinh(lambda.re);
    den = sh * sh + s * s;
    dden = sh2;
  } else {
    const double ch = std::cosh(lambda.re);
    den = -(ch * ch - s * s);
    dden = -sh2;
  }
  if (std::fabs(den) < kPoleTol)
    throw pole_error("kernel_K_d2: evaluation too close to a pole");
  const double ddden = (lambda.branch == Branch::real ? 1.0 : -1.0) * 2.0 * ch2;
  return c * (2.0 * dden * dden - ddden * den) / (2.0 * kPi * den * den * den);
}

namespace {

// K(.|eta) with the eta -> 0 (mod pi) summand of K_r defined as 0 away
// from lambda = 0 (the numerator sin(2 eta) vanishes faster than the
// denominator degenerates).
double K_or_zero(const Rapidity& lambda, double eta) {
  const double w = wrap_angle(eta);
  if (std::min(w, kPi - w) < 1e-14) {
    if (lambda.branch == Branch::real && std::fabs(lambda.re) < kPoleTol)
      throw pole_error("kernel_Kr: lambda = 0 with degenerate angle");
    return 0.0;
  }
  return kernel_K(lambda, eta);
}

double K_d1_or_zero(const Rapidity& lambda, double eta) {
  const double w = wrap_angle(eta);
  if (std::min(w, kPi - w) < 1e-14) {
    if (lambda.branch == Branch::real && std::fabs(lambda.re) < kPoleTol)
      throw pole_error("kernel_Kr_d1: lambda = 0 with degenerate angle");
    return 0.0;
  }
  return kernel_K_d1(lambda, eta);
}

double K_d2_or_zero(const Rapidity& lambda, double eta) {
  const double w = wrap_angle(eta);
  if (std::min(w, kPi - w) < 1e-14) {
    if (lambda.branch == Branch::real && std::fabs(lambda.re) < kPoleTol)
      throw pole_error("kernel_Kr_d2: lambda = 0 with degenerate angle");
    return 0.0;
  }
  return kernel_K_d2(lambda, eta);
}

}  // namespace

double kernel_Kr(const Rapidity& lambda, int r, double zeta) {
  if (r < 1) throw std::domain_error("kernel_Kr: r must be >= 1");
  return K_or_zero(lambda, 0.5 * zeta * (r + 1)) +
         K_or_zero(lambda, 0.5 * zeta * (r - 1));
}

double kernel_Kr_d1(const Rapidity& lambda, int r, double zeta) {
  if (r < 1) throw std::domain_error("kernel_Kr_d1: r must be >= 1");
  return K_d1_or_zero(lambda, 0.5 * zeta * (r + 1)) +
         K_d1_or_zero(lambda, 0.5 * zeta * (r - 1));
}

double kernel_Kr_d2(const Rapidity& lambda, int r, double zeta) {
  if (r < 1) throw std::domain_error("kernel_Kr_d2: r must be >= 1");
  return K_d2_or_zero(lambda, 0.5 * zeta * (r + 1)) +
         K_d2_or_zero(lambda, 0.5 * zeta * (r - 1));
}

double bare_phase(double re, double eta, int imag_sign) {
  const double w = wrap_angle(eta);
  if (std::min(w, kPi - w) < 1e-14) return 0.0;  // sin(2 eta) = 0
  const double th = std::tanh(re);
  if (imag_sign == 0) {
    return 2.0 * std::atan(th / std::tan(w));
  }
  // At eta_hat = pi/2 the kernel vanishes identically on the shifted line,
  // so theta is a constant there; oddness plus i pi periodicity force it
  // to be zero.  (The eta -> pi/2 limits from either side differ by 2 pi
  // jumps that are absorbed by the winding terms of the dressed momenta.)
  if (std::fabs(w - 0.5 * kPi) < 1e-13) return 0.0;
  // theta(re + i s pi/2 | eta) = -s pi sgn(pi - 2 eta_hat)
  //                              - 2 atan(tan(eta_hat) tanh(re)).
  // The constant comes from the vertical leg of the defining contour: the
  // principal value vanishes and the left-avoided pole contributes a
  // clockwise half residue.
  const double level = -imag_sign * kPi * static_cast<double>(sgn0(kPi - 2.0 * w));
  return level - 2.0 * std::atan(std::tan(w) * th);
}

double bare_phase_r(double re, int r, double zeta, int imag_sign) {
  if (r < 1) throw std::domain_error("bare_phase_r: r must be >= 1");
  if (r == 1) return bare_phase(re, zeta, imag_sign);
  return bare_phase(re, 0.5 * zeta * (r + 1), imag_sign) +
         bare_phase(re, 0.5 * zeta * (r - 1), imag_sign);
}

double barnes_G(int n) {
  if (n < 1) throw std::domain_error("barnes_G: n must be >= 1");
  double g = 1.0;
  double fact = 1.0;
  for (int k = 1; k <= n - 2; ++k) {
    fact *= k;
    g *= fact;
  }
  return g;
}

double gaudin_mehta_value(int n) {
  if (n < 1) throw std::domain_error("gaudin_mehta_value: n must be >= 1");
  return std::pow(0.5, 0.5 * n * n) * std::pow(2.0 * kPi, 0.5 * n) *
         barnes_G(n + 2);
}

}  // namespace xxz
