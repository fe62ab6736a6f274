#include <cmath>

#include "doctest.h"
#include "xxz/momentum_map.hpp"
#include "xxz/velocity_atlas.hpp"

namespace {

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

TEST_CASE("dressed charge at the Fermi momentum") {
  Setup s(0.57, 0.21);
  CHECK(std::fabs(s.map.Z_momentum(s.obs.p_F()) - s.obs.Z_at(s.obs.q())) <
        1e-10);
}

TEST_CASE("momentum map round trip") {
  Setup s(0.57, 0.21);
  for (double k : {-0.5, 0.1, 1.2, 2.5, 3.9}) {
    const auto [lam, seg] = s.map.hat_p1_inverse(k);
    CHECK(std::fabs(s.map.hat_p1(lam, seg) - k) < 1e-9);
  }
}

TEST_CASE("velocity reflection symmetry and Fermi bound") {
  for (const auto& [delta, density] :
       {std::pair{0.57, 0.21}, std::pair{-0.60, 0.30}}) {
    Setup s(delta, density);
    const double pF = s.obs.p_F();
    const double period = 2.0 * 3.14159265358979323846 -
                          2.0 * pF * s.map.sgn_pi_2zeta();
    const double hi = s.map.p_plus_1();
    double worst_sym = 0.0;
    for (int i = 0; i <= 400; ++i) {
      const double k = -pF + (hi + pF) * i / 400.0;
      const double km = period - k;
      if (km < -pF || km > hi) continue;
      worst_sym =
          std::max(worst_sym, std::fabs(s.map.v_r(1, k) + s.map.v_r(1, km)));
    }
    CHECK(worst_sym < 1e-8);
    const double vF = s.obs.v_F();
    for (int i = 1; i < 100; ++i) {
      const double k = -pF + 2.0 * pF * i / 100.0;
      CHECK(std::fabs(s.map.v_r(1, k)) < vF);
    }
  }
}

TEST_CASE("equal-velocity structures") {
  for (const auto& [delta, density] :
       {std::pair{0.57, 0.21}, std::pair{-0.60, 0.30}}) {
    Setup s(delta, density);
    const double Km = s.atlas.K_m(), KM = s.atlas.K_M();
    const double eps = 1e-4 * (KM - Km);
    double worst = 0.0, prev_t = 1e300;
    bool decreasing = true;
    for (int i = 0; i <= 200; ++i) {
      const double k = Km + eps + (KM - Km - 2 * eps) * i / 200.0;
      const double t = s.atlas.t_map(k);
      worst = std::max(worst, std::fabs(s.map.v_r(1, k) - s.map.v_r(1, t)));
      decreasing = decreasing && (t < prev_t);
      prev_t = t;
    }
    CHECK(worst < 1e-8);
    CHECK(decreasing);

    // Finite-difference t' matches v1'(k)/v1'(t(k)).
    double worst_rel = 0.0;
    for (int i = 1; i < 20; ++i) {
      const double k = Km + (KM - Km) * i / 20.0;
      const double h = 1e-6 * (KM - Km);
      const double fd = (s.atlas.t_map(k + h) - s.atlas.t_map(k - h)) / (2 * h);
      const double an = s.atlas.t_prime(k);
      worst_rel = std::max(worst_rel, std::fabs(fd - an) / std::fabs(an));
    }
    CHECK(worst_rel < 1e-5);

    const auto rep = s.atlas.verify_hypotheses();
    CHECK(rep.all_pass);
  }
}

TEST_CASE("string branch equal-velocity map") {
  xxz::ModelParams p;
  p.zeta = std::acos(0.57);
  p.density = 0.21;
  p.N = 64;
  p.strings = {{2, 0}};
  const auto obs = xxz::Observables::solve(p);
  const xxz::MomentumMap map(obs);
  const xxz::VelocityAtlas atlas(map);
  const double pF = obs.p_F();
  double worst = 0.0;
  for (int i = 1; i < 40; ++i) {
    const double t = -pF + 2.0 * pF * i / 40.0;
    const double h2 = atlas.h_r_map(2, t);
    worst = std::max(worst, std::fabs(map.v_r(1, t) - map.v_r(2, h2)));
  }
  CHECK(worst < 1e-8);
}
