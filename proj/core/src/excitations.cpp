#include "xxz/excitations.hpp"

#include <cmath>
#include <stdexcept>

namespace xxz {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

bool ExcitationConfig::counting_ok() const {
  int rhs = ell_plus + ell_minus;
  for (const auto& [r, ks] : strings) rhs += r * static_cast<int>(ks.size());
  return n_h() == rhs;
}

double excitation_momentum(const ExcitationConfig& K, const MomentumMap& map) {
  if (!K.counting_ok())
    throw std::invalid_argument("excitation config violates the counting constraint");
  const double pF = map.obs().p_F();
  double P = pF * (K.ell_plus - K.ell_minus) + kPi * K.s_gamma;
  for (const auto& [r, ks] : K.strings)
    for (double k : ks) P += k;
  for (double t : K.holes) P -= t;
  return P;
}

double excitation_energy(const ExcitationConfig& K, const MomentumMap& map) {
  if (!K.counting_ok())
    throw std::invalid_argument("excitation config violates the counting constraint");
  double E = 0.0;
  for (const auto& [r, ks] : K.strings)
    for (double k : ks) E += map.e_r(r, k);
  for (double t : K.holes) E -= map.e_r(1, t);
  return E;
}

double shift_function(const ExcitationConfig& K, int upsilon,
                      const MomentumMap& map) {
  if (upsilon != 1 && upsilon != -1)
    throw std::invalid_argument("shift_function: upsilon must be +-1");
  const auto& obs = map.obs();
  const double pF = obs.p_F();
  const double s = upsilon * pF;
  const double ZpF = map.Z_momentum(pF);

  const int ell_up = (upsilon == 1) ? K.ell_plus : K.ell_minus;
  double v = -upsilon * ell_up + 0.5 * K.s_gamma * ZpF;
  for (double t : K.holes) v += map.phi_momentum(1, s, t);
  int n1_left = 0;
  for (const auto& [r, ks] : K.strings)
    for (double k : ks) {
      v -= map.phi_momentum(r, s, k);
      if (r == 1 &&
          map.hat_p1_inverse(k).second == Segment::particle_left)
        ++n1_left;
    }
  v -= K.ell_plus * map.phi_momentum(1, s, pF);
  v -= K.ell_minus * map.phi_momentum(1, s, -pF);
  v += map.sgn_pi_2zeta() * n1_left * ZpF;
  return v;
}

std::pair<double, double> edge_exponents(const ExcitationConfig& K,
                                         const MomentumMap& map) {
  const double tp = shift_function(K, +1, map);
  const double tm = shift_function(K, -1, map);
  return {tp * tp, tm * tm};
}

}  // namespace xxz
