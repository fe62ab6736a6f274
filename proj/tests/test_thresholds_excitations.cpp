#include <cmath>
#include <vector>

#include "doctest.h"
#include "xxz/excitations.hpp"
#include "xxz/thresholds.hpp"
#include "xxz/velocity_atlas.hpp"

namespace {
constexpr double kPi = 3.14159265358979323846;

struct Setup {
  xxz::Observables obs;
  xxz::MomentumMap map;
  xxz::VelocityAtlas atlas;

  explicit Setup(double delta, double density, int N = 64)
      : obs([&] {
          xxz::ModelParams p;
          p.zeta = std::acos(delta);
          p.density = density;
          p.N = N;
          return xxz::Observables::solve(p);
        }()),
        map(obs),
        atlas(map) {}
};

}  // namespace

TEST_CASE("excitation momentum/energy of the one-hole configuration") {
  Setup s(0.57, 0.21);
  xxz::ExcitationConfig cfg;
  cfg.ell_plus = 1;
  cfg.holes = {0.3};
  CHECK(cfg.counting_ok());
  CHECK(std::fabs(xxz::excitation_momentum(cfg, s.map) -
                  (s.obs.p_F() - 0.3)) < 1e-12);
  CHECK(std::fabs(xxz::excitation_energy(cfg, s.map) + s.map.e_r(1, 0.3)) <
        1e-12);
  xxz::ExcitationConfig empty;
  CHECK(xxz::excitation_momentum(empty, s.map) == 0.0);
  CHECK(xxz::excitation_energy(empty, s.map) == 0.0);
}

TEST_CASE("additivity of momentum and energy") {
  Setup s(0.57, 0.21);
  xxz::ExcitationConfig a, b, u;
  a.ell_plus = 1;
  a.holes = {0.2};
  b.ell_minus = 1;
  b.holes = {-0.4};
  u.ell_plus = 1;
  u.ell_minus = 1;
  u.holes = {0.2, -0.4};
  CHECK(std::fabs(xxz::excitation_momentum(a, s.map) +
                  xxz::excitation_momentum(b, s.map) -
                  xxz::excitation_momentum(u, s.map)) < 1e-12);
  CHECK(std::fabs(xxz::excitation_energy(a, s.map) +
                  xxz::excitation_energy(b, s.map) -
                  xxz::excitation_energy(u, s.map)) < 1e-12);
}

TEST_CASE("free-fermion edge exponents of the one-hole configuration") {
  xxz::ModelParams p;
  p.zeta = kPi / 2.0;
  p.h = 2.0;
  p.N = 64;
  const auto obs = xxz::Observables::solve(p);
  const xxz::MomentumMap map(obs);
  xxz::ExcitationConfig cfg;
  cfg.ell_plus = 1;
  cfg.holes = {0.1};
  CHECK(std::fabs(xxz::shift_function(cfg, +1, map) + 1.0) < 1e-8);
  CHECK(std::fabs(xxz::shift_function(cfg, -1, map)) < 1e-8);
  const auto [dp, dm] = xxz::edge_exponents(cfg, map);
  CHECK(std::fabs(dp - 1.0) < 1e-8);
  CHECK(std::fabs(dm) < 1e-8);
}

TEST_CASE("edge exponents are nonnegative along all curve families") {
  Setup s(0.57, 0.21);
  for (const auto& kind :
       {xxz::ThresholdKind::OneHole(), xxz::ThresholdKind::OneParticle(1),
        xxz::ThresholdKind::ParticleHole(),
        xxz::ThresholdKind::ParticleTwoHoles()}) {
    const auto grid = xxz::default_parameter_grid(kind, s.atlas, 11);
    for (const auto& sm : xxz::threshold_curve(kind, grid, s.atlas)) {
      CHECK(sm.delta_plus >= 0.0);
      CHECK(sm.delta_minus >= 0.0);
    }
  }
}

TEST_CASE("curve-specific formulas match the general exponents") {
  Setup s(0.57, 0.21, 128);
  const double pF = s.obs.p_F();
  auto phi = [&](double sm, double k) { return s.map.phi_momentum(1, sm, k); };
  auto sq = [](double x) { return x * x; };

  auto check_kind = [&](const xxz::ThresholdKind& kind, auto dp_fn,
                        auto dm_fn) {
    const auto grid = xxz::default_parameter_grid(kind, s.atlas, 17);
    double worst = 0.0;
    for (const auto& sm : xxz::threshold_curve(kind, grid, s.atlas)) {
      worst = std::max(worst, std::fabs(sm.delta_plus - dp_fn(sm.param)));
      worst = std::max(worst, std::fabs(sm.delta_minus - dm_fn(sm.param)));
    }
    CHECK(worst < 1e-10);
  };

  check_kind(
      xxz::ThresholdKind::OneHole(),
      [&](double t0) { return sq(phi(pF, t0) - phi(pF, pF) - 1.0); },
      [&](double t0) { return sq(phi(-pF, t0) - phi(-pF, pF)); });
  check_kind(
      xxz::ThresholdKind::OneParticle(1),
      [&](double k0) { return sq(1.0 - phi(pF, k0) + phi(pF, pF)); },
      [&](double k0) { return sq(phi(-pF, pF) - phi(-pF, k0)); });
  check_kind(
      xxz::ThresholdKind::ParticleHole(),
      [&](double k0) { return sq(phi(pF, s.atlas.t_map(k0)) - phi(pF, k0)); },
      [&](double k0) {
        return sq(phi(-pF, s.atlas.t_map(k0)) - phi(-pF, k0));
      });
  check_kind(
      xxz::ThresholdKind::ParticleTwoHoles(),
      [&](double k0) {
        return sq(-1.0 + 2 * phi(pF, s.atlas.t_map(k0)) - phi(pF, k0) -
                  phi(pF, pF));
      },
      [&](double k0) {
        return sq(2 * phi(-pF, s.atlas.t_map(k0)) - phi(-pF, k0) -
                  phi(-pF, pF));
      });
}

TEST_CASE("figure-1 dataset reflection closure") {
  Setup s(0.57, 0.21);
  const auto rows = xxz::figure1_dataset(s.atlas, 8);
  CHECK(rows.size() >= 2 * 9 * 8);  // 9 families, mirrored
  for (const auto& row : rows) {
    const double mirrored = std::fmod(2.0 * kPi - row.k + 2.0 * kPi, 2.0 * kPi);
    bool found = false;
    for (const auto& other : rows)
      if (std::fabs(other.k - mirrored) < 1e-9 &&
          std::fabs(other.sample.E0 - row.sample.E0) < 1e-12)
        found = true;
    CHECK(found);
  }
}

TEST_CASE("equal-velocity curve tangent slope") {
  Setup s(0.57, 0.21, 128);
  const auto kind = xxz::ThresholdKind::ParticleHole();
  const auto grid = xxz::default_parameter_grid(kind, s.atlas, 9);
  const double h = 1e-5;
  for (double k0 : grid) {
    auto p_of = [&](double k) { return k - s.atlas.t_map(k); };
    auto e_of = [&](double k) {
      return s.map.e_r(1, k) - s.map.e_r(1, s.atlas.t_map(k));
    };
    const double slope =
        (e_of(k0 + h) - e_of(k0 - h)) / (p_of(k0 + h) - p_of(k0 - h));
    CHECK(std::fabs(slope - s.map.v_r(1, k0)) < 1e-6);
  }
}
