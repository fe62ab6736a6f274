#include <cmath>

#include "doctest.h"
#include "xxz/observables.hpp"

namespace {
constexpr double kPi = 3.14159265358979323846;

xxz::Observables solve_fig(double delta, double density, int N = 64) {
  xxz::ModelParams p;
  p.zeta = std::acos(delta);
  p.density = density;
  p.N = N;
  return xxz::Observables::solve(p);
}
}  // namespace

TEST_CASE("free-fermion point reproduces closed forms") {
  xxz::ModelParams p;
  p.zeta = kPi / 2.0;
  p.h = 2.0;
  p.N = 64;
  const auto obs = xxz::Observables::solve(p);
  double worst_eps = 0.0, worst_p = 0.0, worst_Z = 0.0, worst_phi = 0.0;
  const xxz::Rapidity qp{obs.q()};
  for (int j = 0; j < obs.grid().size(); ++j) {
    const double lam = obs.grid().nodes[j];
    worst_eps = std::max(worst_eps, std::fabs(obs.eps1()[j] -
                                              (2.0 - 4.0 / std::cosh(2 * lam))));
    worst_p = std::max(worst_p,
                       std::fabs(obs.p1_at(lam) - std::atan(std::sinh(2 * lam))));
    worst_Z = std::max(worst_Z, std::fabs(obs.Z()[j] - 1.0));
    worst_phi = std::max(worst_phi,
                         std::fabs(obs.dressed_phase(1, xxz::Rapidity{lam}, qp)));
  }
  CHECK(worst_eps < 1e-8);
  CHECK(worst_p < 1e-8);
  CHECK(worst_Z < 1e-8);
  CHECK(worst_phi < 1e-8);
  // cosh(2q) = 2 at h = 2, hence p_F = atan(sqrt(3)) = pi/3.
  CHECK(std::fabs(obs.p_F() - kPi / 3.0) < 1e-10);
}

TEST_CASE("density round trip") {
  const auto obs = solve_fig(0.57, 0.21);
  CHECK(std::fabs(obs.density() - 0.21) < 1e-10);
  CHECK(obs.q() > 0.0);
  CHECK(obs.v_F() > 0.0);
}

TEST_CASE("dressed charge / dressed phase identities") {
  for (const auto& [delta, density] :
       {std::pair{0.57, 0.21}, std::pair{-0.60, 0.30}}) {
    const auto obs = solve_fig(delta, density, 128);
    const xxz::Rapidity qp{obs.q()}, qm{-obs.q()};
    double worst = 0.0;
    for (int j = 0; j < obs.grid().size(); ++j) {
      const xxz::Rapidity lam{obs.grid().nodes[j]};
      const double lhs = obs.dressed_phase(1, lam, qp) -
                         obs.dressed_phase(1, lam, qm) + 1.0;
      worst = std::max(worst, std::fabs(lhs - obs.Z()[j]));
    }
    CHECK(worst < 1e-8);
    const double lhs2 = 1.0 + obs.dressed_phase(1, qp, qp) -
                        obs.dressed_phase(1, qm, qp);
    CHECK(std::fabs(lhs2 - 1.0 / obs.Z_at(obs.q())) < 1e-8);
  }
}

TEST_CASE("self-convergence of scalar outputs") {
  const auto a = solve_fig(0.57, 0.21, 64);
  const auto b = solve_fig(0.57, 0.21, 128);
  CHECK(std::fabs(a.q() - b.q()) < 1e-9);
  CHECK(std::fabs(a.p_F() - b.p_F()) < 1e-9);
  CHECK(std::fabs(a.v_F() - b.v_F()) < 1e-9);
}
