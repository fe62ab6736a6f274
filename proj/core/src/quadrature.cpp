#include "xxz/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace xxz {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-based initial guess for the i-th root of P_n.
    double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = -p1 / pp;
      z += dz;
      if (std::fabs(dz) < 1e-16) break;
    }
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

namespace {

// Gauss 7 / Kronrod 15 pair.
constexpr double kKronrodX[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,
    0.741531185599394,  0.864864423359769,  0.949107912342759,
    0.991455371120813};
constexpr double kKronrodW[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979,
    0.022935322010529};
constexpr double kGaussW[7] = {0.129484966168870, 0.279705391489277,
                               0.381830050505119, 0.417959183673469,
                               0.381830050505119, 0.279705391489277,
                               0.129484966168870};

struct GK {
  double kronrod;
  double err;
};

GK gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  double kres = 0.0, gres = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double v = f(c + h * kKronrodX[i]);
    kres += kKronrodW[i] * v;
    if (i % 2 == 1) gres += kGaussW[i / 2] * v;
  }
  kres *= h;
  gres *= h;
  return {kres, std::fabs(kres - gres)};
}

double adaptive_rec(const std::function<double(double)>& f, double a, double b,
                    double tol, int depth, int max_depth) {
  const GK whole = gk15(f, a, b);
  if (whole.err <= tol || depth >= max_depth) return whole.kronrod;
  const double m = 0.5 * (a + b);
  return adaptive_rec(f, a, m, 0.5 * tol, depth + 1, max_depth) +
         adaptive_rec(f, m, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double adaptive_quadrature(const std::function<double(double)>& f, double a,
                           double b, double rel_tol, double abs_tol,
                           int max_depth) {
  if (a == b) return 0.0;
  const GK first = gk15(f, a, b);
  const double scale = std::max(std::fabs(first.kronrod), 1e-30);
  const double tol = std::max(abs_tol, rel_tol * scale);
  return adaptive_rec(f, a, b, tol, 0, max_depth);
}

double tanh_sinh_offsets(const std::function<double(double, double)>& f,
                         double a, double b, double rel_tol, int max_level) {
  if (a == b) return 0.0;
  const double len = b - a, h2 = 0.5 * len;
  // x = c + h2 * tanh(pi/2 sinh(t)); integrate over t.  The callback gets
  // the exact offsets (x - a, b - x) so that endpoint distances never pass
  // through a cancelling subtraction.
  auto g = [&](double t) {
    const double s = 0.5 * kPi * std::sinh(t);
    const double w = 0.5 * kPi * std::cosh(t) / std::pow(std::cosh(s), 2);
    double da, db;
    if (s >= 0.0) {
      db = h2 * 2.0 / (1.0 + std::exp(2.0 * s));
      da = len - db;
    } else {
      da = h2 * 2.0 / (1.0 + std::exp(-2.0 * s));
      db = len - da;
    }
    if (da <= 0.0 || db <= 0.0) return 0.0;  // underflowed to the endpoint
    const double v = f(da, db);
    return std::isfinite(v) ? v * w : 0.0;
  };
  const double tmax = 6.5;
  double h = 1.0;
  double sum = g(0.0);
  for (double t = h; t < tmax; t += h) sum += g(t) + g(-t);
  double integral = sum * h;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double add = 0.0;
    for (double t = h; t < tmax; t += 2.0 * h) add += g(t) + g(-t);
    const double next = 0.5 * integral + add * h;
    const double err = std::fabs(next - integral);
    integral = next;
    if (level >= 4 && err <= rel_tol * std::max(std::fabs(integral), 1e-300))
      break;
  }
  return integral * h2;
}

double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double rel_tol, int max_level) {
  return tanh_sinh_offsets(
      [&](double da, double db) {
        // Form x from the nearer endpoint so that the distance to it keeps
        // as much relative precision as x itself can carry.  Nodes whose x
        // rounds onto an endpoint are dropped: f may be singular there.
        const double x = (da <= db) ? a + da : b - db;
        if (x <= a || x >= b) return 0.0;
        return f(x);
      },
      a, b, rel_tol, max_level);
}

}  // namespace xxz
