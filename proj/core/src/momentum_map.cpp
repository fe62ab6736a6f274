#include "xxz/momentum_map.hpp"

#include <cmath>
#include <stdexcept>

#include "xxz/roots.hpp"

namespace xxz {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;
}

MomentumMap::MomentumMap(const Observables& obs) : obs_(&obs) {
  sgn_ = static_cast<double>(sgn0(kPi - 2.0 * obs.zeta()));
  p_plus_ = kTwoPi - obs.p_F() * (1.0 + 2.0 * sgn_);
  k_right_end_ = hat_p1({lam_cut_, Branch::real}, Segment::particle_right);
  k_top_end_ = hat_p1({-lam_cut_, Branch::shifted}, Segment::particle_top);
}

double MomentumMap::p1_raw(const Rapidity& lam) const {
  return obs_->p_r(1, lam);
}

double MomentumMap::hat_p1(const Rapidity& lam, Segment seg) const {
  switch (seg) {
    case Segment::hole:
    case Segment::particle_right:
      return p1_raw(lam);
    case Segment::particle_top:
      return p1_raw({lam.re, Branch::shifted}) + kTwoPi;
    case Segment::particle_left:
      return p1_raw(lam) - 2.0 * obs_->p_F() * sgn_ + kTwoPi;
  }
  throw std::logic_error("hat_p1: bad segment");
}

std::pair<Rapidity, Segment> MomentumMap::hat_p1_inverse(double k) const {
  const double pF = obs_->p_F();
  const double q = obs_->q();
  const double tol = 1e-13;
  if (k < -pF - 1e-9 || k > p_plus_ + 1e-9)
    throw std::domain_error("hat_p1_inverse: momentum outside range");
  if (k <= pF) {
    Segment seg = Segment::hole;
    double lam = brent_root(
        [&](double x) { return hat_p1({x, Branch::real}, seg) - k; }, -q, q,
        tol);
    return {{lam, Branch::real}, seg};
  }
  if (k <= k_right_end_) {
    Segment seg = Segment::particle_right;
    double lam = brent_root(
        [&](double x) { return hat_p1({x, Branch::real}, seg) - k; }, q,
        lam_cut_, tol);
    return {{lam, Branch::real}, seg};
  }
  if (k < k_top_end_) {
    Segment seg = Segment::particle_top;
    double lam = brent_root(
        [&](double x) { return hat_p1({x, Branch::shifted}, seg) - k; },
        -lam_cut_, lam_cut_, tol);
    return {{lam, Branch::shifted}, seg};
  }
  Segment seg = Segment::particle_left;
  double lam = brent_root(
      [&](double x) { return hat_p1({x, Branch::real}, seg) - k; }, -lam_cut_,
      -q, tol);
  return {{lam, Branch::real}, seg};
}

double MomentumMap::e_r(int r, double k) const {
  const Rapidity lam =
      (r == 1) ? hat_p1_inverse(k).first : p_r_inverse(r, k);
  return obs_->eps_r(r, lam);
}

double MomentumMap::v_r(int r, double k) const {
  const Rapidity lam =
      (r == 1) ? hat_p1_inverse(k).first : p_r_inverse(r, k);
  return obs_->eps_r_d1(r, lam) / obs_->p_r_d1(r, lam);
}

double MomentumMap::v_r_prime(int r, double k) const {
  const Rapidity lam =
      (r == 1) ? hat_p1_inverse(k).first : p_r_inverse(r, k);
  const double pd = obs_->p_r_d1(r, lam);
  return (obs_->eps_r_d2(r, lam) * pd -
          obs_->eps_r_d1(r, lam) * obs_->p_r_d2(r, lam)) /
         (pd * pd * pd);
}

Rapidity MomentumMap::p_r_inverse(int r, double k) const {
  if (r < 2) throw std::invalid_argument("p_r_inverse: use hat_p1 for r = 1");
  const Branch br = obs_->string_parity(r) ? Branch::shifted : Branch::real;
  const double a = obs_->p_r(r, {-lam_cut_, br});
  const double b = obs_->p_r(r, {lam_cut_, br});
  if (k < std::min(a, b) - 1e-9 || k > std::max(a, b) + 1e-9)
    throw std::domain_error("p_r_inverse: momentum outside I_r");
  double lam = brent_root(
      [&](double x) { return obs_->p_r(r, {x, br}) - k; }, -lam_cut_, lam_cut_,
      1e-13);
  return {lam, br};
}

std::pair<double, double> MomentumMap::interval_r(int r) const {
  if (r == 1) return {obs_->p_F(), p_plus_};
  const Branch br = obs_->string_parity(r) ? Branch::shifted : Branch::real;
  const double a = obs_->p_r(r, {-lam_cut_, br});
  const double b = obs_->p_r(r, {lam_cut_, br});
  return {std::min(a, b), std::max(a, b)};
}

double MomentumMap::Z_momentum(double s) const {
  const auto [lam, seg] = hat_p1_inverse(s);
  const double zeta = obs_->zeta();
  const auto& grid = obs_->grid();
  double acc = 1.0;
  for (int j = 0; j < grid.size(); ++j)
    acc -= grid.weights[j] *
           kernel_K(lam - Rapidity{grid.nodes[j], Branch::real}, zeta) *
           obs_->Z()[j];
  return acc;
}

double MomentumMap::phi_momentum(int r, double s, double k) const {
  const Rapidity lam = hat_p1_inverse(s).first;
  const Rapidity mu =
      (r == 1) ? hat_p1_inverse(k).first : p_r_inverse(r, k);
  return obs_->dressed_phase(r, lam, mu);
}

}  // namespace xxz
