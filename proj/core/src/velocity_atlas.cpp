#include "xxz/velocity_atlas.hpp"

#include <cmath>
#include <stdexcept>

#include "xxz/roots.hpp"

namespace xxz {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

VelocityAtlas::VelocityAtlas(const MomentumMap& map) : map_(&map) {
  const auto& obs = map.obs();
  const double pF = obs.p_F();
  const double sg = map.sgn_pi_2zeta();
  const double mid = kPi - pF * sg;  // symmetry point of v1
  auto v1p = [&](double k) { return map_->v_r_prime(1, k); };
  // Maximum of v1 on the particle branch: bracketed root of v1'.
  const double a = pF + 1e-6, b = mid - 1e-6;
  if (v1p(a) <= 0.0 || v1p(b) >= 0.0) {
    // Fall back to a golden-section maximum if the bracket fails.
    P_m_ = golden_minimize([&](double k) { return -map_->v_r(1, k); }, a, b,
                           1e-11);
  } else {
    P_m_ = brent_root(v1p, a, b, 1e-13);
  }
  P_M_ = 2.0 * kPi - 2.0 * pF * sg - P_m_;
  const double vF = obs.v_F();
  K_m_ = brent_root([&](double k) { return map_->v_r(1, k) - vF; }, P_m_, mid,
                    1e-13);
  K_M_ = 2.0 * kPi - 2.0 * pF * sg - K_m_;
}

double VelocityAtlas::t_map(double k) const {
  const double pF = map_->obs().p_F();
  const double vk = map_->v_r(1, k);
  // At the window edges v1(k) grazes +-v_F = v1(+-p_F), and rounding can
  // push it just outside the attainable range of the Fermi zone.
  if (k <= K_m_ || vk >= map_->v_r(1, pF)) return pF;
  if (k >= K_M_ || vk <= map_->v_r(1, -pF)) return -pF;
  return brent_root([&](double t) { return map_->v_r(1, t) - vk; }, -pF, pF,
                    1e-13);
}

double VelocityAtlas::t_map_inverse(double t) const {
  const double vt = map_->v_r(1, t);
  return brent_root([&](double k) { return map_->v_r(1, k) - vt; }, K_m_,
                    K_M_, 1e-13);
}

double VelocityAtlas::t_prime(double k) const {
  double kk = k;
  const double eps = eps_margin();
  if (kk < K_m_ + eps) kk = K_m_ + eps;
  if (kk > K_M_ - eps) kk = K_M_ - eps;
  return map_->v_r_prime(1, kk) / map_->v_r_prime(1, t_map(kk));
}

double VelocityAtlas::pL_map(double k) const {
  const double vk = map_->v_r(1, k);
  return brent_root([&](double p) { return map_->v_r(1, p) - vk; }, P_m_,
                    K_m_, 1e-13);
}

double VelocityAtlas::pR_map(double k) const {
  const double vk = map_->v_r(1, k);
  return brent_root([&](double p) { return map_->v_r(1, p) - vk; }, K_M_,
                    P_M_, 1e-13);
}

double VelocityAtlas::h_r_map(int r, double t) const {
  const double vt = map_->v_r(1, t);
  const auto [lo, hi] = map_->interval_r(r);
  const double pad = 1e-9 * (hi - lo);
  return brent_root([&](double k) { return map_->v_r(r, k) - vt; }, lo + pad,
                    hi - pad, 1e-13);
}

HypothesisReport VelocityAtlas::verify_hypotheses(int grid_size) const {
  HypothesisReport rep;
  const auto& obs = map_->obs();
  const double pF = obs.p_F(), vF = obs.v_F();
  const double pp = map_->p_plus_1();
  rep.worst_fermi_margin = 1e300;
  // |v1| < v_F strictly inside the Fermi zone.
  for (int i = 1; i < grid_size; ++i) {
    const double k = -pF + 2.0 * pF * i / grid_size;
    const double m = vF - std::fabs(map_->v_r(1, k));
    rep.worst_fermi_margin = std::min(rep.worst_fermi_margin, m);
    if (m <= 0.0) {
      rep.failures.push_back("|v1| >= v_F inside the Fermi zone");
      break;
    }
  }
  // increasing / decreasing / increasing with breakpoints P_m, P_M.
  rep.worst_monotone_margin = 1e300;
  auto check_sign = [&](double lo, double hi, double sign, const char* what) {
    for (int i = 1; i < grid_size; ++i) {
      const double k = lo + (hi - lo) * i / grid_size;
      const double d = sign * map_->v_r_prime(1, k);
      rep.worst_monotone_margin = std::min(rep.worst_monotone_margin, d);
      if (d <= 0.0) {
        rep.failures.push_back(what);
        return;
      }
    }
  };
  const double pad = 1e-4 * (P_M_ - P_m_);
  check_sign(-pF + pad, P_m_ - pad, +1.0, "v1 not increasing before P_m");
  check_sign(P_m_ + pad, P_M_ - pad, -1.0, "v1 not decreasing on (P_m,P_M)");
  check_sign(P_M_ + pad, pp - pad, +1.0, "v1 not increasing after P_M");
  // |v1| > v_F between p_F and K_m and between K_M and p_+.
  for (int i = 1; i < grid_size; ++i) {
    const double k = pF + (K_m_ - pF) * i / grid_size;
    if (std::fabs(map_->v_r(1, k)) <= vF - 1e-12) {
      rep.failures.push_back("|v1| <= v_F on (p_F, K_m)");
      break;
    }
  }
  // t decreasing across the window.
  double prev = t_map(K_m_ + eps_margin());
  for (int i = 1; i <= 64; ++i) {
    const double k = K_m_ + eps_margin() +
                     (K_M_ - K_m_ - 2 * eps_margin()) * i / 64.0;
    const double t = t_map(k);
    if (t >= prev + 1e-12) {
      rep.failures.push_back("t map not decreasing");
      break;
    }
    prev = t;
  }
  rep.all_pass = rep.failures.empty();
  return rep;
}

}  // namespace xxz
