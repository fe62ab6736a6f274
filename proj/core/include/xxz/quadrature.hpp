#pragma once

#include <functional>
#include <vector>

namespace xxz {

// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

// Adaptive Gauss-Kronrod (G7/K15) on a finite interval for smooth or
// piecewise-smooth integrands.  rel_tol is applied against the running
// global estimate.
double adaptive_quadrature(const std::function<double(double)>& f, double a,
                           double b, double rel_tol = 1e-10,
                           double abs_tol = 1e-300, int max_depth = 40);

// tanh-sinh (double exponential) quadrature on [a, b]; integrable
// endpoint power singularities x^(p-1), p > 0, are handled without
// special casing.
double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12, int max_level = 12);

// tanh-sinh variant for integrands that need full relative precision in the
// distance to the endpoints (e.g. (x-a)^(p-1) with p < 1 and a != 0, where
// reconstructing x-a from x loses the tail mass).  The callback receives the
// exact offsets (x - a, b - x); both are nonnegative and sum to b - a.
double tanh_sinh_offsets(const std::function<double(double, double)>& f,
                         double a, double b, double rel_tol = 1e-12,
                         int max_level = 12);

}  // namespace xxz
