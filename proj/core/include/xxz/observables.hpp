#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "xxz/fredholm.hpp"
#include "xxz/kernels.hpp"

namespace xxz {

// String content: r-strings beyond r=1, with their parity (0: real axis,
// 1: shifted by i pi/2).
struct StringSpec {
  int r;
  int parity;
};

struct ModelParams {
  double J = 1.0;
  double zeta = 0.0;  // Delta = cos(zeta), massless regime zeta in (0, pi)
  // Exactly one of the three must be set.
  std::optional<double> h;
  std::optional<double> density;   // D in (0, 1/2)
  std::optional<double> fermi_q;   // Fermi rapidity directly
  int N = 128;
  std::vector<StringSpec> strings;

  double delta() const;  // cos(zeta)
  double h_critical() const;  // 4J(1+Delta)
};

// Solved ground-state observables of the massless XXZ chain at fixed
// (J, zeta, h): dressed energy, charge, momentum and phase, all living on a
// Gauss-Legendre grid over the Fermi zone [-q, q].
class Observables {
 public:
  static Observables solve(const ModelParams& params);

  const ModelParams& params() const { return params_; }
  const QuadratureGrid& grid() const { return grid_; }

  double J() const { return params_.J; }
  double zeta() const { return params_.zeta; }
  double h() const { return h_; }
  double q() const { return q_; }
  double p_F() const { return p_F_; }
  double density() const;  // p1(q)/pi
  double v_F() const { return v_F_; }

  // Nodal values on the grid.
  const std::vector<double>& Z() const { return Z_; }
  const std::vector<double>& eps1() const { return eps1_; }
  const std::vector<double>& eps1_d1() const { return eps1_d1_; }
  const std::vector<double>& eps1_d2() const { return eps1_d2_; }
  const std::vector<double>& p1_d1() const { return p1_d1_; }
  const std::vector<double>& p1_d2() const { return p1_d2_; }

  // Pointwise evaluation anywhere (Nystrom extension off the grid).
  double Z_at(double lambda) const;
  double eps_r(int r, const Rapidity& lam) const;
  double eps_r_d1(int r, const Rapidity& lam) const;
  double eps_r_d2(int r, const Rapidity& lam) const;
  double p_r(int r, const Rapidity& lam) const;
  double p_r_d1(int r, const Rapidity& lam) const;
  double p_r_d2(int r, const Rapidity& lam) const;
  double eps1_d1_at(double lambda) const;
  double eps1_d2_at(double lambda) const;
  double p1_at(double lambda) const;  // real branch, no winding constants

  // r-bound dressed phase phi_r(lambda, mu); solved per mu and memoised.
  double dressed_phase(int r, const Rapidity& lam, const Rapidity& mu) const;

  int string_parity(int r) const;  // declared parity; r=1 -> 0

  // Constants of the momentum formula.
  static int ell_r(int r, double zeta);
  static int m_r(int r, double zeta);

 private:
  Observables() = default;

  const std::vector<double>& phase_solution(int r, const Rapidity& mu) const;

  ModelParams params_;
  QuadratureGrid grid_;
  std::shared_ptr<FredholmSolver> solver_;
  double h_ = 0.0, q_ = 0.0, p_F_ = 0.0, v_F_ = 0.0;
  std::vector<double> Z_, g_, eps1_, eps1_d1_, eps1_d2_;
  std::vector<double> p1_d1_, p1_d2_;
  mutable std::map<std::tuple<int, int, double>, std::vector<double>>
      phase_cache_;
};

}  // namespace xxz
