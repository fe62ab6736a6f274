#pragma once

#include <utility>

#include "xxz/observables.hpp"

namespace xxz {

// Segments of the oriented domain of the deformed momentum map hat_p1:
// [q, inf) . {-R + i pi/2} . (-inf, -q], preceded by the hole zone [-q, q].
enum class Segment { hole, particle_right, particle_top, particle_left };

// Momentum representation of the dressed observables: the deformed map
// hat_p1 and its inverse, the dispersions e_r(k), velocities v_r(k),
// dressed charge and phase as functions of momenta.
class MomentumMap {
 public:
  explicit MomentumMap(const Observables& obs);

  const Observables& obs() const { return *obs_; }

  double sgn_pi_2zeta() const { return sgn_; }  // sgn(pi - 2 zeta), sgn(0):=0
  double p_plus_1() const { return p_plus_; }   // 2pi - pF - 2 pF sgn
  double lambda_cut() const { return lam_cut_; }

  double hat_p1(const Rapidity& lam, Segment seg) const;
  std::pair<Rapidity, Segment> hat_p1_inverse(double k) const;

  // r = 1: k on [-p_F, p_plus_1]; r >= 2: k in interval_r(r).
  double e_r(int r, double k) const;
  double v_r(int r, double k) const;
  double v_r_prime(int r, double k) const;

  Rapidity p_r_inverse(int r, double k) const;  // r >= 2
  std::pair<double, double> interval_r(int r) const;

  double Z_momentum(double s) const;
  double phi_momentum(int r, double s, double k) const;

 private:
  double p1_raw(const Rapidity& lam) const;  // obs p_r(1, .)
  const Observables* obs_;
  double sgn_ = 0.0;
  double p_plus_ = 0.0;
  double lam_cut_ = 20.0;      // momenta saturate to ~1e-17 beyond this
  double k_right_end_ = 0.0;   // hat_p1 at the right segment's far end
  double k_top_end_ = 0.0;     // hat_p1 at the top segment's far (left) end
};

}  // namespace xxz
