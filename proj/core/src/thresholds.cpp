#include "xxz/thresholds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "xxz/kernels.hpp"

namespace xxz {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kGammaPoleTol = 1e-6;

double fold_2pi(double k) {
  double f = std::fmod(k, 2.0 * kPi);
  if (f < 0.0) f += 2.0 * kPi;
  return f;
}

// |v_F + v|^{d_-} * |v_F - v|^{d_+}
double edge_denominator(double v_F, double v, double d_plus, double d_minus) {
  return std::pow(std::fabs(v_F + v), d_minus) *
         std::pow(std::fabs(v_F - v), d_plus);
}

unsigned gamma_pole_flag(double gamma_arg) {
  const double nearest = std::round(gamma_arg);
  if (nearest <= 0.5 && std::fabs(gamma_arg - nearest) < kGammaPoleTol)
    return kFlagGammaPole;
  return 0;
}

unsigned exponent_flags(double d_plus, double d_minus) {
  return (d_plus < 1e-12 || d_minus < 1e-12) ? kFlagExponentZero : 0;
}

}  // namespace

ThresholdKind ThresholdKind::OneHole(int lp, int lm) {
  ThresholdKind k;
  k.variant = ThresholdVariant::one_hole;
  k.ell_plus = lp;
  k.ell_minus = lm;
  return k;
}

ThresholdKind ThresholdKind::OneParticle(int branch) {
  ThresholdKind k;
  k.variant = ThresholdVariant::one_particle;
  k.branch = branch;
  // Branches 1, 3 remove the particle from the right Fermi edge, branches
  // 2, 4 from the left one; 1, 2 live on (p_F, K_m), 3, 4 on (K_M, p_+^1).
  k.ell_plus = (branch % 2 == 1) ? -1 : 0;
  k.ell_minus = (branch % 2 == 1) ? 0 : -1;
  return k;
}

ThresholdKind ThresholdKind::OneString(int r) {
  ThresholdKind k;
  k.variant = ThresholdVariant::one_string;
  k.r = r;
  k.ell_plus = -r;
  k.ell_minus = 0;
  return k;
}

ThresholdKind ThresholdKind::ParticleHole(int branch) {
  ThresholdKind k;
  k.variant = ThresholdVariant::particle_hole;
  k.branch = branch;
  k.n_p = 1;
  k.n_h = 1;
  k.ell_plus = 0;
  k.ell_minus = 0;
  return k;
}

ThresholdKind ThresholdKind::ParticleTwoHoles() {
  ThresholdKind k;
  k.variant = ThresholdVariant::particle_two_holes;
  k.n_p = 1;
  k.n_h = 2;
  k.ell_plus = 1;
  k.ell_minus = 0;
  return k;
}

ThresholdKind ThresholdKind::Multi(int n_p, int n_h) {
  ThresholdKind k;
  k.variant = ThresholdVariant::multi;
  k.n_p = n_p;
  k.n_h = n_h;
  k.ell_plus = n_h - n_p;
  k.ell_minus = 0;
  return k;
}

ThresholdKind ThresholdKind::MultiString(int n_st, int n_h, int r) {
  ThresholdKind k;
  k.variant = ThresholdVariant::multi_string;
  k.n_st = n_st;
  k.n_h = n_h;
  k.r = r;
  k.ell_plus = n_h - r * n_st;
  k.ell_minus = 0;
  return k;
}

std::string ThresholdKind::name() const {
  switch (variant) {
    case ThresholdVariant::one_hole:
      return "h_" + std::to_string(ell_plus) + "_" + std::to_string(ell_minus);
    case ThresholdVariant::one_particle:
      return "p" + std::to_string(branch);
    case ThresholdVariant::one_string:
      return "s" + std::to_string(r);
    case ThresholdVariant::particle_hole:
      return (branch == 2) ? "ph2" : "ph";
    case ThresholdVariant::particle_two_holes:
      return "p2h";
    case ThresholdVariant::multi:
      return "m_" + std::to_string(n_p) + "p" + std::to_string(n_h) + "h";
    case ThresholdVariant::multi_string:
      return "ms_" + std::to_string(n_st) + "s" + std::to_string(r) + "_" +
             std::to_string(n_h) + "h";
  }
  return "unknown";
}

namespace {

ThresholdSample sample_one_hole(const ThresholdKind& kind, double t0,
                                const VelocityAtlas& atlas) {
  const MomentumMap& map = atlas.map();
  const double v_F = map.obs().v_F();
  ExcitationConfig cfg;
  cfg.ell_plus = kind.ell_plus;
  cfg.ell_minus = kind.ell_minus;
  cfg.holes = {t0};

  ThresholdSample s;
  s.param = t0;
  s.P0 = excitation_momentum(cfg, map);
  s.E0 = excitation_energy(cfg, map);
  auto [dp, dm] = edge_exponents(cfg, map);
  s.delta_plus = dp;
  s.delta_minus = dm;
  s.exponent = dp + dm - 1.0;
  const double v1 = map.v_r(1, t0);
  s.amplitude_universal = (2.0 * kPi) * (2.0 * kPi) /
                          (std::tgamma(dp + dm) *
                           edge_denominator(v_F, v1, dp, dm));
  s.w_plus = 1.0;
  s.w_minus = 0.0;
  s.flags = exponent_flags(dp, dm);
  return s;
}

ThresholdSample sample_one_particle(const ThresholdKind& kind, double k0,
                                    const VelocityAtlas& atlas) {
  const MomentumMap& map = atlas.map();
  const double v_F = map.obs().v_F();
  ExcitationConfig cfg;
  cfg.ell_plus = kind.ell_plus;
  cfg.ell_minus = kind.ell_minus;
  cfg.strings[1] = {k0};

  ThresholdSample s;
  s.param = k0;
  s.P0 = excitation_momentum(cfg, map);
  s.E0 = excitation_energy(cfg, map);
  auto [dp, dm] = edge_exponents(cfg, map);
  s.delta_plus = dp;
  s.delta_minus = dm;
  s.exponent = dp + dm - 1.0;
  const double v1 = map.v_r(1, k0);
  s.amplitude_universal = (2.0 * kPi) * (2.0 * kPi) *
                          std::tgamma(1.0 - dp - dm) /
                          edge_denominator(v_F, v1, dp, dm);
  // eta = -sgn(v): the Xi(+dw) weight carries delta_eta.
  const double d_eta = (v1 > 0.0) ? dm : dp;
  const double d_meta = (v1 > 0.0) ? dp : dm;
  s.w_plus = std::sin(kPi * d_eta) / kPi;
  s.w_minus = std::sin(kPi * d_meta) / kPi;
  s.flags = gamma_pole_flag(1.0 - dp - dm) | exponent_flags(dp, dm);
  return s;
}

ThresholdSample sample_one_string(const ThresholdKind& kind, double k0,
                                  const VelocityAtlas& atlas) {
  const MomentumMap& map = atlas.map();
  const double v_F = map.obs().v_F();
  ExcitationConfig cfg;
  cfg.ell_plus = kind.ell_plus;
  cfg.ell_minus = kind.ell_minus;
  cfg.strings[kind.r] = {k0};

  ThresholdSample s;
  s.param = k0;
  s.P0 = excitation_momentum(cfg, map);
  s.E0 = excitation_energy(cfg, map);
  auto [dp, dm] = edge_exponents(cfg, map);
  s.delta_plus = dp;
  s.delta_minus = dm;
  s.exponent = dp + dm - 1.0;
  const double vr = map.v_r(kind.r, k0);
  const double denom = edge_denominator(v_F, vr, dp, dm);
  if (std::fabs(vr) > v_F) {
    s.amplitude_universal =
        (2.0 * kPi) * (2.0 * kPi) * std::tgamma(1.0 - dp - dm) / denom;
    const double d_eta = (vr > 0.0) ? dm : dp;
    const double d_meta = (vr > 0.0) ? dp : dm;
    s.w_plus = std::sin(kPi * d_eta) / kPi;
    s.w_minus = std::sin(kPi * d_meta) / kPi;
    s.flags = gamma_pole_flag(1.0 - dp - dm);
  } else {
    // Slow string: one-sided edge, like the hole branch.
    s.amplitude_universal =
        (2.0 * kPi) * (2.0 * kPi) / (std::tgamma(dp + dm) * denom);
    s.w_plus = 1.0;
    s.w_minus = 0.0;
  }
  s.flags |= exponent_flags(dp, dm);
  return s;
}

ThresholdSample sample_particle_hole(const ThresholdKind& kind, double k0,
                                     const VelocityAtlas& atlas) {
  const MomentumMap& map = atlas.map();
  const double v_F = map.obs().v_F();
  const double t0 = atlas.t_map(k0);
  ExcitationConfig cfg;
  cfg.holes = {t0};
  cfg.strings[1] = {k0};

  ThresholdSample s;
  s.param = k0;
  s.P0 = excitation_momentum(cfg, map);
  s.E0 = excitation_energy(cfg, map);
  auto [dp, dm] = edge_exponents(cfg, map);
  s.delta_plus = dp;
  s.delta_minus = dm;
  const double expo = dp + dm - 0.5;
  s.exponent = expo;
  const double v1 = map.v_r(1, k0);
  const double tp = atlas.t_prime(k0);
  const double v1p_hole = map.v_r_prime(1, t0);
  s.amplitude_universal = (2.0 * kPi) * (2.0 * kPi) /
                          std::sqrt(1.0 - tp) *
                          std::sqrt(2.0 * kPi / v1p_hole) *
                          std::tgamma(-expo) /
                          edge_denominator(v_F, v1, dp, dm);
  s.w_plus = std::cos(kPi * expo) / kPi;
  s.w_minus = 1.0 / kPi;
  s.flags = gamma_pole_flag(-expo) | exponent_flags(dp, dm);
  if (kind.branch == 2) {
    // Second branch: image of the first under reflection about k = pi.  The
    // reflection flips v_1 and transposes the edge exponents; the exponent
    // sum, the amplitude and the side weights are invariant.
    s.P0 = 2.0 * kPi - s.P0;
    std::swap(s.delta_plus, s.delta_minus);
  }
  return s;
}

ThresholdSample sample_particle_two_holes(double k0,
                                          const VelocityAtlas& atlas) {
  const MomentumMap& map = atlas.map();
  const double v_F = map.obs().v_F();
  const double t0 = atlas.t_map(k0);
  ExcitationConfig cfg;
  cfg.ell_plus = 1;
  cfg.holes = {t0, t0};
  cfg.strings[1] = {k0};

  ThresholdSample s;
  s.param = k0;
  s.P0 = excitation_momentum(cfg, map);
  s.E0 = excitation_energy(cfg, map);
  auto [dp, dm] = edge_exponents(cfg, map);
  s.delta_plus = dp;
  s.delta_minus = dm;
  const double expo = dp + dm + 1.0;
  s.exponent = expo;
  const double v1 = map.v_r(1, k0);
  const double tp = atlas.t_prime(k0);
  const double v1p_hole = map.v_r_prime(1, t0);
  s.amplitude_universal = -std::pow(2.0 * kPi, 3) /
                          std::sqrt(1.0 - 2.0 * tp) /
                          (v1p_hole * v1p_hole) * std::tgamma(-expo) /
                          edge_denominator(v_F, v1, dp, dm);
  s.w_plus = std::sin(kPi * expo) / kPi;
  s.w_minus = 0.0;
  s.flags = gamma_pole_flag(-expo) | exponent_flags(dp, dm);
  return s;
}

ThresholdSample sample_multi(const ThresholdKind& kind, double t0,
                             const VelocityAtlas& atlas) {
  const MomentumMap& map = atlas.map();
  const double v_F = map.obs().v_F();
  const int n_p = kind.n_p;
  const int n_h = kind.n_h;
  ExcitationConfig cfg;
  cfg.ell_plus = kind.ell_plus;
  cfg.ell_minus = kind.ell_minus;
  cfg.holes.assign(static_cast<size_t>(n_h), t0);
  double k0 = 0.0, p_prime = 0.0, v1p_part = 1.0;
  if (n_p > 0) {
    k0 = atlas.t_map_inverse(t0);
    cfg.strings[1].assign(static_cast<size_t>(n_p), k0);
    p_prime = 1.0 / atlas.t_prime(k0);
    v1p_part = map.v_r_prime(1, k0);
  }
  const double P_prime = n_p * p_prime - n_h;
  const double v1_t = map.v_r(1, t0);
  const double v1p_hole = map.v_r_prime(1, t0);

  ThresholdSample s;
  s.param = t0;
  s.P0 = excitation_momentum(cfg, map);
  s.E0 = excitation_energy(cfg, map);
  auto [dp, dm] = edge_exponents(cfg, map);
  s.delta_plus = dp;
  s.delta_minus = dm;
  const double theta = dp + dm + 0.5 * (n_p * n_p + n_h * n_h - 3);
  s.exponent = theta;
  s.amplitude_universal =
      1.0 / std::sqrt(std::fabs(P_prime)) *
      std::pow(-1.0 / v1p_part, 0.5 * n_p * n_p) *
      std::pow(1.0 / v1p_hole, 0.5 * (n_h * n_h - 1)) *
      barnes_G(n_p + 1) * barnes_G(n_h + 1) *
      std::pow(2.0 * kPi, 0.5 * (3 + n_p + n_h)) * std::tgamma(-theta) /
      edge_denominator(v_F, v1_t, dp, dm);
  s.w_plus = std::sin(kPi * (dp + dm)) / kPi;
  s.w_minus = std::sin(kPi * 0.5 * (n_p * n_p + n_h * n_h - 1)) / kPi;
  s.flags = gamma_pole_flag(-theta) | exponent_flags(dp, dm);
  if (std::fabs(P_prime) < 1e-10) s.flags |= kFlagPPrimeZero;
  return s;
}

ThresholdSample sample_multi_string(const ThresholdKind& kind, double t0,
                                    const VelocityAtlas& atlas) {
  const MomentumMap& map = atlas.map();
  const double v_F = map.obs().v_F();
  const int n_st = kind.n_st;
  const int n_h = kind.n_h;
  const int r = kind.r;
  const double k0 = atlas.h_r_map(r, t0);
  ExcitationConfig cfg;
  cfg.ell_plus = kind.ell_plus;
  cfg.ell_minus = kind.ell_minus;
  cfg.holes.assign(static_cast<size_t>(n_h), t0);
  cfg.strings[r].assign(static_cast<size_t>(n_st), k0);

  const double v1p_hole = map.v_r_prime(1, t0);
  const double vrp = map.v_r_prime(r, k0);
  const double h_prime = v1p_hole / vrp;  // from v_r(h(t)) = v1(t)
  const double P_prime = n_st * h_prime - n_h;
  const double v1_t = map.v_r(1, t0);
  const int sigma_r = (vrp > 0.0) ? 1 : -1;
  const int s_r = (P_prime > 0.0) ? -1 : 1;

  ThresholdSample s;
  s.param = t0;
  s.P0 = excitation_momentum(cfg, map);
  s.E0 = excitation_energy(cfg, map);
  auto [dp, dm] = edge_exponents(cfg, map);
  s.delta_plus = dp;
  s.delta_minus = dm;
  const double theta = dp + dm + 0.5 * (n_st * n_st + n_h * n_h - 3);
  s.exponent = theta;
  s.amplitude_universal =
      1.0 / std::sqrt(std::fabs(P_prime)) *
      std::pow(1.0 / std::fabs(vrp), 0.5 * n_st * n_st) *
      std::pow(1.0 / v1p_hole, 0.5 * (n_h * n_h - 1)) *
      barnes_G(n_st + 1) * barnes_G(n_h + 1) *
      std::pow(2.0 * kPi, 0.5 * (3 + n_st + n_h)) * std::tgamma(-theta) /
      edge_denominator(v_F, v1_t, dp, dm);
  const double nu_plus = dp + dm + 0.5 * (sigma_r < 0 ? n_st * n_st : 0) -
                         0.5 * (1 - s_r);
  const double nu_minus = 0.5 * (sigma_r > 0 ? n_st * n_st : 0) +
                          0.5 * n_h * n_h + 0.5 * (1 - s_r);
  s.w_plus = std::sin(kPi * nu_plus) / kPi;
  s.w_minus = std::sin(kPi * nu_minus) / kPi;
  s.flags = gamma_pole_flag(-theta) | exponent_flags(dp, dm);
  if (std::fabs(P_prime) < 1e-10) s.flags |= kFlagPPrimeZero;
  return s;
}

void validate_kind(const ThresholdKind& kind) {
  switch (kind.variant) {
    case ThresholdVariant::one_hole:
      if (kind.ell_plus + kind.ell_minus != 1)
        throw std::invalid_argument("one_hole: ell_+ + ell_- must be 1");
      break;
    case ThresholdVariant::one_particle:
      if (kind.branch < 1 || kind.branch > 4)
        throw std::invalid_argument("one_particle: branch must be 1..4");
      if (kind.ell_plus + kind.ell_minus != -1)
        throw std::invalid_argument("one_particle: ell_+ + ell_- must be -1");
      break;
    case ThresholdVariant::one_string:
      if (kind.r < 2) throw std::invalid_argument("one_string: r must be >= 2");
      if (kind.ell_plus + kind.ell_minus != -kind.r)
        throw std::invalid_argument("one_string: ell_+ + ell_- must be -r");
      break;
    case ThresholdVariant::particle_hole:
      if (kind.branch < 1 || kind.branch > 2)
        throw std::invalid_argument("particle_hole: branch must be 1 or 2");
      break;
    case ThresholdVariant::particle_two_holes:
      break;
    case ThresholdVariant::multi:
      if (kind.n_h < 1 || kind.n_p + kind.n_h < 2)
        throw std::invalid_argument("multi: need n_h >= 1, n_p + n_h >= 2");
      if (kind.ell_plus + kind.ell_minus != kind.n_h - kind.n_p)
        throw std::invalid_argument("multi: ell_+ + ell_- must be n_h - n_p");
      break;
    case ThresholdVariant::multi_string:
      if (kind.r < 2)
        throw std::invalid_argument("multi_string: r must be >= 2");
      if (kind.n_h < 1 || kind.n_st < 1)
        throw std::invalid_argument("multi_string: need n_h, n_st >= 1");
      if (kind.ell_plus + kind.ell_minus != kind.n_h - kind.r * kind.n_st)
        throw std::invalid_argument(
            "multi_string: ell_+ + ell_- must be n_h - r n_st");
      break;
  }
}

}  // namespace

std::vector<ThresholdSample> threshold_curve(const ThresholdKind& kind,
                                             const std::vector<double>& grid,
                                             const VelocityAtlas& atlas) {
  validate_kind(kind);
  std::vector<ThresholdSample> out;
  out.reserve(grid.size());
  for (double x : grid) {
    switch (kind.variant) {
      case ThresholdVariant::one_hole:
        out.push_back(sample_one_hole(kind, x, atlas));
        break;
      case ThresholdVariant::one_particle:
        out.push_back(sample_one_particle(kind, x, atlas));
        break;
      case ThresholdVariant::one_string:
        out.push_back(sample_one_string(kind, x, atlas));
        break;
      case ThresholdVariant::particle_hole:
        out.push_back(sample_particle_hole(kind, x, atlas));
        break;
      case ThresholdVariant::particle_two_holes:
        out.push_back(sample_particle_two_holes(x, atlas));
        break;
      case ThresholdVariant::multi:
        out.push_back(sample_multi(kind, x, atlas));
        break;
      case ThresholdVariant::multi_string:
        out.push_back(sample_multi_string(kind, x, atlas));
        break;
    }
  }
  return out;
}

std::vector<double> default_parameter_grid(const ThresholdKind& kind,
                                           const VelocityAtlas& atlas, int n,
                                           double margin_fraction) {
  validate_kind(kind);
  const MomentumMap& map = atlas.map();
  const double pF = map.obs().p_F();
  double a = 0.0, b = 0.0;
  switch (kind.variant) {
    case ThresholdVariant::one_hole:
    case ThresholdVariant::multi:
    case ThresholdVariant::multi_string:
      a = -pF;
      b = pF;
      break;
    case ThresholdVariant::one_particle:
      if (kind.branch <= 2) {
        a = pF;
        b = atlas.K_m();
      } else {
        a = atlas.K_M();
        b = map.p_plus_1();
      }
      break;
    case ThresholdVariant::one_string: {
      auto [lo, hi] = map.interval_r(kind.r);
      a = lo;
      b = hi;
      break;
    }
    case ThresholdVariant::particle_hole:
    case ThresholdVariant::particle_two_holes:
      a = atlas.K_m();
      b = atlas.K_M();
      break;
  }
  const double margin = margin_fraction * (b - a);
  a += margin;
  b -= margin;
  std::vector<double> grid(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    grid[static_cast<size_t>(i)] =
        (n == 1) ? 0.5 * (a + b) : a + (b - a) * i / (n - 1.0);
  return grid;
}

std::vector<double> singular_profile(const ThresholdSample& sample,
                                     const std::vector<double>& dw_grid) {
  std::vector<double> out;
  out.reserve(dw_grid.size());
  for (double dw : dw_grid) {
    if (dw == 0.0) {
      if (sample.exponent > 0.0 || (sample.w_plus == 0.0 && sample.w_minus == 0.0))
        out.push_back(0.0);
      else
        out.push_back(std::numeric_limits<double>::infinity());
      continue;
    }
    const double w = (dw > 0.0) ? sample.w_plus : sample.w_minus;
    if (w == 0.0) {
      out.push_back(0.0);
      continue;
    }
    out.push_back(sample.amplitude_universal *
                  std::pow(std::fabs(dw), sample.exponent) * w);
  }
  return out;
}

std::vector<Figure1Row> figure1_dataset(const VelocityAtlas& atlas,
                                        int points_per_curve) {
  std::vector<ThresholdKind> kinds = {
      ThresholdKind::OneHole(1, 0),      ThresholdKind::OneHole(0, 1),
      ThresholdKind::OneParticle(1),     ThresholdKind::OneParticle(2),
      ThresholdKind::OneParticle(3),     ThresholdKind::OneParticle(4),
      ThresholdKind::ParticleHole(1),    ThresholdKind::ParticleHole(2),
      ThresholdKind::ParticleTwoHoles(),
  };
  std::vector<Figure1Row> rows;
  for (const auto& kind : kinds) {
    const auto grid = default_parameter_grid(kind, atlas, points_per_curve);
    const auto samples = threshold_curve(kind, grid, atlas);
    for (const auto& s : samples) {
      rows.push_back({kind.name(), s, fold_2pi(s.P0)});
      // Mirror partner about k = pi.
      rows.push_back({kind.name() + "_m", s, fold_2pi(2.0 * kPi - s.P0)});
    }
  }
  return rows;
}

}  // namespace xxz
