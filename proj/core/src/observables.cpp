#include "xxz/observables.hpp"

#include <cmath>
#include <stdexcept>

#include "xxz/roots.hpp"

namespace xxz {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

double ModelParams::delta() const { return std::cos(zeta); }
double ModelParams::h_critical() const { return 4.0 * J * (1.0 + delta()); }

int Observables::ell_r(int r, double zeta) {
  return 1 - r + 2 * static_cast<int>(std::floor(r * zeta / (2.0 * kPi)));
}

int Observables::m_r(int r, double zeta) {
  int m = 2 - r - (r == 1 ? 1 : 0);
  m += 2 * static_cast<int>(std::floor(zeta * (r + 1) / (2.0 * kPi)));
  m += 2 * static_cast<int>(std::floor(zeta * (r - 1) / (2.0 * kPi)));
  return m;
}

namespace {

// One dressed-energy/charge solve on [-Q, Q]: everything that only
// depends on (zeta, N, Q).
struct CoreSolve {
  QuadratureGrid grid;
  std::shared_ptr<FredholmSolver> solver;
  std::vector<double> Z, g;  // charge and driving solutions on the nodes

  CoreSolve(double zeta, int N, double Q) : grid(N, Q) {
    auto kern = [zeta](double x, double y) {
      return kernel_K({x - y, Branch::real}, zeta);
    };
    solver = std::make_shared<FredholmSolver>(grid, kern);
    const int n = grid.size();
    std::vector<double> rhs1(n, 1.0), rhsg(n);
    for (int i = 0; i < n; ++i)
      rhsg[i] = kernel_K({grid.nodes[i], Branch::real}, 0.5 * zeta);
    Z = solver->solve(rhs1);
    g = solver->solve(rhsg);
  }

  double Z_end(double zeta, double lambda) const {
    auto kern = [zeta](double x, double y) {
      return kernel_K({x - y, Branch::real}, zeta);
    };
    return solver->extend(kern, lambda, 1.0, Z);
  }
  double g_end(double zeta, double lambda) const {
    auto kern = [zeta](double x, double y) {
      return kernel_K({x - y, Branch::real}, zeta);
    };
    return solver->extend(kern, lambda,
                          kernel_K({lambda, Branch::real}, 0.5 * zeta), g);
  }
  // epsilon(lambda | Q) at the right endpoint for given field h.
  double eps_end(double J, double zeta, double h) const {
    const double Q = grid.Q;
    return h * Z_end(zeta, Q) -
           4.0 * kPi * J * std::sin(zeta) * g_end(zeta, Q);
  }
  // Fermi momentum p1(Q) of this Q (independent of h).
  double p1_end(double zeta) const {
    const int n = grid.size();
    std::vector<double> rhs(n), p1p;
    for (int i = 0; i < n; ++i)
      rhs[i] =
          2.0 * kPi * kernel_K({grid.nodes[i], Branch::real}, 0.5 * zeta);
    p1p = solver->solve(rhs);
    double acc = bare_phase(grid.Q, 0.5 * zeta);
    for (int j = 0; j < n; ++j)
      acc -= grid.weights[j] * bare_phase(grid.Q - grid.nodes[j], zeta) *
             p1p[j] / (2.0 * kPi);
    return acc;
  }
};

}  // namespace

Observables Observables::solve(const ModelParams& params) {
  const int nspec = (params.h ? 1 : 0) + (params.density ? 1 : 0) +
                    (params.fermi_q ? 1 : 0);
  if (nspec != 1)
    throw std::invalid_argument(
        "ModelParams: exactly one of h, density, fermi_q must be set");
  if (!(params.zeta > 0.0 && params.zeta < kPi))
    throw std::domain_error("ModelParams: zeta must lie in (0, pi)");
  if (params.J <= 0.0) throw std::domain_error("ModelParams: J must be > 0");

  const double zeta = params.zeta;
  const double J = params.J;
  const int N = params.N;

  double q;
  if (params.fermi_q) {
    q = *params.fermi_q;
    if (q <= 0.0) throw std::domain_error("fermi_q must be > 0");
  } else if (params.h) {
    const double h = *params.h;
    if (h <= 0.0 || h >= params.h_critical())
      throw std::domain_error("field outside massless window (0, h_c)");
    q = brent_root(
        [&](double Q) { return CoreSolve(zeta, N, Q).eps_end(J, zeta, h); },
        1e-6, 50.0, 1e-13);
  } else {
    const double D = *params.density;
    if (D <= 0.0 || D >= 0.5)
      throw std::domain_error("density must lie in (0, 1/2)");
    q = brent_root(
        [&](double Q) {
          return CoreSolve(zeta, N, Q).p1_end(zeta) / kPi - D;
        },
        1e-6, 50.0, 1e-13);
  }

  Observables obs;
  obs.params_ = params;
  CoreSolve core(zeta, N, q);
  obs.grid_ = core.grid;
  obs.solver_ = core.solver;
  obs.q_ = q;
  obs.Z_ = core.Z;
  obs.g_ = core.g;

  // Field from the closure epsilon(q|q) = 0 unless given directly.
  obs.h_ = params.h ? *params.h
                    : 4.0 * kPi * J * std::sin(zeta) * core.g_end(zeta, q) /
                          core.Z_end(zeta, q);

  const int n = obs.grid_.size();
  const double c = 4.0 * kPi * J * std::sin(zeta);
  obs.eps1_.resize(n);
  for (int i = 0; i < n; ++i)
    obs.eps1_[i] = obs.h_ * obs.Z_[i] - c * obs.g_[i];

  auto kern = [zeta](double x, double y) {
    return kernel_K({x - y, Branch::real}, zeta);
  };

  // Differentiated equations.  The boundary terms of the first derivative
  // vanish because eps1(+-q) = 0; the second derivative picks up
  // +K(.-q) eps1'(q) - K(.+q) eps1'(-q) on the right-hand side.
  std::vector<double> rhs(n);
  for (int i = 0; i < n; ++i)
    rhs[i] = -c * kernel_K_d1({obs.grid_.nodes[i], Branch::real}, 0.5 * zeta);
  obs.eps1_d1_ = obs.solver_->solve(rhs);
  const double e1q = obs.solver_->extend(
      kern, q, -c * kernel_K_d1({q, Branch::real}, 0.5 * zeta), obs.eps1_d1_);
  const double e1mq = obs.solver_->extend(
      kern, -q, -c * kernel_K_d1({-q, Branch::real}, 0.5 * zeta),
      obs.eps1_d1_);
  for (int i = 0; i < n; ++i) {
    const double x = obs.grid_.nodes[i];
    rhs[i] = -c * kernel_K_d2({x, Branch::real}, 0.5 * zeta) +
             kernel_K({x - q, Branch::real}, zeta) * e1q -
             kernel_K({x + q, Branch::real}, zeta) * e1mq;
  }
  obs.eps1_d2_ = obs.solver_->solve(rhs);

  for (int i = 0; i < n; ++i)
    rhs[i] =
        2.0 * kPi * kernel_K({obs.grid_.nodes[i], Branch::real}, 0.5 * zeta);
  obs.p1_d1_ = obs.solver_->solve(rhs);
  const double p1q = obs.solver_->extend(
      kern, q, 2.0 * kPi * kernel_K({q, Branch::real}, 0.5 * zeta),
      obs.p1_d1_);
  const double p1mq = obs.solver_->extend(
      kern, -q, 2.0 * kPi * kernel_K({-q, Branch::real}, 0.5 * zeta),
      obs.p1_d1_);
  for (int i = 0; i < n; ++i) {
    const double x = obs.grid_.nodes[i];
    rhs[i] = 2.0 * kPi * kernel_K_d1({x, Branch::real}, 0.5 * zeta) +
             kernel_K({x - q, Branch::real}, zeta) * p1q -
             kernel_K({x + q, Branch::real}, zeta) * p1mq;
  }
  obs.p1_d2_ = obs.solver_->solve(rhs);

  obs.p_F_ = obs.p1_at(q);
  obs.v_F_ = e1q / p1q;
  return obs;
}

double Observables::density() const { return p_F_ / kPi; }

double Observables::Z_at(double lambda) const {
  const double zeta = params_.zeta;
  auto kern = [zeta](double x, double y) {
    return kernel_K({x - y, Branch::real}, zeta);
  };
  return solver_->extend(kern, lambda, 1.0, Z_);
}

double Observables::eps_r(int r, const Rapidity& lam) const {
  const double zeta = params_.zeta;
  double acc = r * h_ -
               4.0 * kPi * params_.J * std::sin(zeta) *
                   kernel_K(lam, 0.5 * r * zeta);
  for (int j = 0; j < grid_.size(); ++j)
    acc -= grid_.weights[j] *
           kernel_Kr(lam - Rapidity{grid_.nodes[j], Branch::real}, r, zeta) *
           eps1_[j];
  return acc;
}

double Observables::eps_r_d1(int r, const Rapidity& lam) const {
  const double zeta = params_.zeta;
  double acc = -4.0 * kPi * params_.J * std::sin(zeta) *
               kernel_K_d1(lam, 0.5 * r * zeta);
  for (int j = 0; j < grid_.size(); ++j)
    acc -=
        grid_.weights[j] *
        kernel_Kr_d1(lam - Rapidity{grid_.nodes[j], Branch::real}, r, zeta) *
        eps1_[j];
  return acc;
}

double Observables::eps_r_d2(int r, const Rapidity& lam) const {
  const double zeta = params_.zeta;
  double acc = -4.0 * kPi * params_.J * std::sin(zeta) *
               kernel_K_d2(lam, 0.5 * r * zeta);
  for (int j = 0; j < grid_.size(); ++j)
    acc -=
        grid_.weights[j] *
        kernel_Kr_d2(lam - Rapidity{grid_.nodes[j], Branch::real}, r, zeta) *
        eps1_[j];
  return acc;
}

namespace {

// Indicator of the strip A_{r,sigma} at |Im| = 0 or pi/2.
bool in_strip(const Rapidity& lam, double eta_hat) {
  const double lo = std::min(eta_hat, kPi - eta_hat);
  const double im = (lam.branch == Branch::shifted) ? 0.5 * kPi : 0.0;
  return im >= lo;
}

}  // namespace

double Observables::p_r(int r, const Rapidity& lam) const {
  const double zeta = params_.zeta;
  const int s = (lam.branch == Branch::shifted) ? 1 : 0;
  double acc = bare_phase(lam.re, 0.5 * r * zeta, s);
  for (int j = 0; j < grid_.size(); ++j)
    acc -= grid_.weights[j] *
           bare_phase_r(lam.re - grid_.nodes[j], r, zeta, s) * p1_d1_[j] /
           (2.0 * kPi);
  acc += kPi * ell_r(r, zeta) - p_F_ * m_r(r, zeta);
  for (int sigma = -1; sigma <= 1; sigma += 2) {
    if (r == 1 && sigma == -1) continue;
    const double eta_hat = wrap_angle(0.5 * zeta * (r + sigma));
    if (in_strip(lam, eta_hat))
      acc -= 2.0 * p_F_ * sgn0(kPi - 2.0 * eta_hat);
  }
  return acc;
}

double Observables::p_r_d1(int r, const Rapidity& lam) const {
  const double zeta = params_.zeta;
  double acc = 2.0 * kPi * kernel_K(lam, 0.5 * r * zeta);
  for (int j = 0; j < grid_.size(); ++j)
    acc -= grid_.weights[j] *
           kernel_Kr(lam - Rapidity{grid_.nodes[j], Branch::real}, r, zeta) *
           p1_d1_[j];
  return acc;
}

double Observables::p_r_d2(int r, const Rapidity& lam) const {
  const double zeta = params_.zeta;
  double acc = 2.0 * kPi * kernel_K_d1(lam, 0.5 * r * zeta);
  for (int j = 0; j < grid_.size(); ++j)
    acc -=
        grid_.weights[j] *
        kernel_Kr_d1(lam - Rapidity{grid_.nodes[j], Branch::real}, r, zeta) *
        p1_d1_[j];
  return acc;
}

double Observables::eps1_d1_at(double lambda) const {
  const double zeta = params_.zeta;
  const double c = 4.0 * kPi * params_.J * std::sin(zeta);
  auto kern = [zeta](double x, double y) {
    return kernel_K({x - y, Branch::real}, zeta);
  };
  return solver_->extend(
      kern, lambda, -c * kernel_K_d1({lambda, Branch::real}, 0.5 * zeta),
      eps1_d1_);
}

double Observables::eps1_d2_at(double lambda) const {
  const double zeta = params_.zeta;
  const double c = 4.0 * kPi * params_.J * std::sin(zeta);
  const double e1q = eps1_d1_at(q_), e1mq = eps1_d1_at(-q_);
  auto kern = [zeta](double x, double y) {
    return kernel_K({x - y, Branch::real}, zeta);
  };
  const double rhs = -c * kernel_K_d2({lambda, Branch::real}, 0.5 * zeta) +
                     kernel_K({lambda - q_, Branch::real}, zeta) * e1q -
                     kernel_K({lambda + q_, Branch::real}, zeta) * e1mq;
  return solver_->extend(kern, lambda, rhs, eps1_d2_);
}

double Observables::p1_at(double lambda) const {
  return p_r(1, {lambda, Branch::real});
}

int Observables::string_parity(int r) const {
  if (r == 1) return 0;
  for (const auto& s : params_.strings)
    if (s.r == r) return s.parity;
  throw std::invalid_argument("string_parity: r-string not enabled");
}

const std::vector<double>& Observables::phase_solution(
    int r, const Rapidity& mu) const {
  const auto key = std::make_tuple(r, static_cast<int>(mu.branch), mu.re);
  auto it = phase_cache_.find(key);
  if (it != phase_cache_.end()) return it->second;
  const double zeta = params_.zeta;
  const int n = grid_.size();
  const int s = (mu.branch == Branch::shifted) ? -1 : 0;
  std::vector<double> rhs(n);
  const double half_mr = 0.5 * m_r(r, zeta);
  for (int i = 0; i < n; ++i)
    rhs[i] =
        bare_phase_r(grid_.nodes[i] - mu.re, r, zeta, s) / (2.0 * kPi) +
        half_mr;
  auto sol = solver_->solve(rhs);
  return phase_cache_.emplace(key, std::move(sol)).first->second;
}

double Observables::dressed_phase(int r, const Rapidity& lam,
                                  const Rapidity& mu) const {
  const double zeta = params_.zeta;
  const auto& sol = phase_solution(r, mu);
  const int s = (lam.branch == Branch::shifted ? 1 : 0) -
                (mu.branch == Branch::shifted ? 1 : 0);
  const double rhs =
      bare_phase_r(lam.re - mu.re, r, zeta, s) / (2.0 * kPi) +
      0.5 * m_r(r, zeta);
  if (lam.branch == Branch::real)
    return solver_->extend(
        [zeta](double x, double y) {
          return kernel_K({x - y, Branch::real}, zeta);
        },
        lam.re, rhs, sol);
  double acc = rhs;
  for (int j = 0; j < grid_.size(); ++j)
    acc -= grid_.weights[j] *
           kernel_K({lam.re - grid_.nodes[j], Branch::shifted}, zeta) * sol[j];
  return acc;
}

}  // namespace xxz
