#pragma once

#include <string>
#include <vector>

#include "xxz/momentum_map.hpp"

namespace xxz {

struct HypothesisReport {
  bool all_pass = false;
  std::vector<std::string> failures;
  double worst_fermi_margin = 0.0;    // min of v_F - |v1| inside Fermi zone
  double worst_monotone_margin = 0.0; // min |v1'| away from P_m, P_M
};

// Equal-velocity structures on the particle branch: the velocity extrema
// P_m, P_M, the window [K_m, K_M] where |v1| < v_F, and the matching maps
// t, pL, pR, h_r of the equal-velocity construction.
class VelocityAtlas {
 public:
  explicit VelocityAtlas(const MomentumMap& map);

  const MomentumMap& map() const { return *map_; }

  double P_m() const { return P_m_; }
  double P_M() const { return P_M_; }
  double K_m() const { return K_m_; }
  double K_M() const { return K_M_; }

  // t: [K_m, K_M] -> [-p_F, p_F], v1(t(k)) = v1(k); strictly decreasing.
  double t_map(double k) const;
  double t_map_inverse(double t) const;  // [-p_F,p_F] -> [K_m,K_M]
  double t_prime(double k) const;        // v1'(k)/v1'(t(k))

  // pL: [p_F, P_m] -> [P_m, K_m];  pR: [P_M, p_+^(1)] -> [K_M, P_M].
  double pL_map(double k) const;
  double pR_map(double k) const;

  // h_r: [-p_F, p_F] -> I_r window, v_r(h_r(t)) = v1(t), for enabled r >= 2.
  double h_r_map(int r, double t) const;

  HypothesisReport verify_hypotheses(int grid_size = 512) const;

 private:
  double eps_margin() const { return 1e-4 * (K_M_ - K_m_); }
  const MomentumMap* map_;
  double P_m_ = 0.0, P_M_ = 0.0, K_m_ = 0.0, K_M_ = 0.0;
};

}  // namespace xxz
