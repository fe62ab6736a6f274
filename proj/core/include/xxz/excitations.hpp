#pragma once

#include <map>
#include <utility>
#include <vector>

#include "xxz/momentum_map.hpp"

namespace xxz {

// An excitation configuration K: Umklapp deficiencies, hole momenta in
// [-p_F, p_F], and r-string momenta in their intervals I_r (r = 1 are the
// particles on the deformed branch).
struct ExcitationConfig {
  int ell_plus = 0;
  int ell_minus = 0;
  std::vector<double> holes;                    // t_a
  std::map<int, std::vector<double>> strings;   // r -> k_a^(r)
  int s_gamma = 0;                              // operator spin

  int n_h() const { return static_cast<int>(holes.size()); }
  int n_r(int r) const {
    auto it = strings.find(r);
    return it == strings.end() ? 0 : static_cast<int>(it->second.size());
  }
  // n_h = sum_r r n_r + ell_+ + ell_-
  bool counting_ok() const;
};

double excitation_momentum(const ExcitationConfig& K, const MomentumMap& map);
double excitation_energy(const ExcitationConfig& K, const MomentumMap& map);

// Shift function theta_upsilon(K) at the upsilon = +-1 Fermi edge and the
// edge exponents Delta_+- = theta_+-^2.
double shift_function(const ExcitationConfig& K, int upsilon,
                      const MomentumMap& map);
std::pair<double, double> edge_exponents(const ExcitationConfig& K,
                                         const MomentumMap& map);

}  // namespace xxz
