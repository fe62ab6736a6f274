#pragma once

#include <stdexcept>

// Elementary kernels, bare scattering phases and the special-function
// values entering the XXZ dressed observables.
//
// Rapidities live either on the real axis (branch 0) or on the shifted
// line R + i pi/2 (branch pi/2).  All evaluations stay in real
// arithmetic: the pi/2 shift is folded into the kernel denominators
// analytically.

namespace xxz {

enum class Branch { real = 0, shifted = 1 };  // Im(lambda) = 0 or pi/2

struct Rapidity {
  double re = 0.0;
  Branch branch = Branch::real;
};

// lambda1 - lambda2 with branch bookkeeping; two shifted rapidities
// differ by a real number (the i*pi shift drops by periodicity).
Rapidity operator-(const Rapidity& a, const Rapidity& b);

class pole_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// K(lambda | eta) = sin(2 eta) / (2 pi sinh(lambda+i eta) sinh(lambda-i eta)),
// reduced to real form on both branches.  eta may be any real composite
// angle r*zeta/2 (the kernel is pi-periodic in eta).
double kernel_K(const Rapidity& lambda, double eta);
double kernel_K_d1(const Rapidity& lambda, double eta);  // d/dlambda
double kernel_K_d2(const Rapidity& lambda, double eta);  // d^2/dlambda^2

// K_r = K(.|(r+1) zeta/2) + K(.|(r-1) zeta/2).  The eta = 0 summand is
// identically zero away from lambda = 0.
double kernel_Kr(const Rapidity& lambda, int r, double zeta);
double kernel_Kr_d1(const Rapidity& lambda, int r, double zeta);
double kernel_Kr_d2(const Rapidity& lambda, int r, double zeta);

// Bare phase theta(lambda|eta) = 2 pi int_Gamma K(mu - 0+ | eta) dmu,
// evaluated at lambda = re + i * imag_sign * pi/2, imag_sign in {-1,0,1}.
// On the real line this is 2 atan(cot(eta) tanh(re)); crossing to
// Im = +-pi/2 picks up the constant -+pi sgn(pi - 2 eta_hat).
double bare_phase(double re, double eta, int imag_sign = 0);
double bare_phase_r(double re, int r, double zeta, int imag_sign = 0);

// eta reduced mod pi into [0, pi).
double wrap_angle(double eta);

// sgn with sgn(0) := 0 (used for the pi - 2 zeta sign at free fermions).
inline int sgn0(double x) { return (x > 0.0) - (x < 0.0); }

// Barnes G at positive integers: G(n) = prod_{k=1}^{n-2} k!.
double barnes_G(int n);

// Gaudin-Mehta integral over R^n of exp(-(y,y)) prod (y_a-y_b)^2,
// expressed as (1/2)^{n^2/2} (2 pi)^{n/2} G(2+n).
double gaudin_mehta_value(int n);

}  // namespace xxz
