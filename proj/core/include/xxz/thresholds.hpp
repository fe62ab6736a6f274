#pragma once

#include <string>
#include <vector>

#include "xxz/excitations.hpp"
#include "xxz/velocity_atlas.hpp"

namespace xxz {

enum class ThresholdVariant {
  one_hole,
  one_particle,
  one_string,
  particle_hole,
  particle_two_holes,
  multi,
  multi_string,
};

// A threshold curve family: excitation content plus Umklapp assignment.
struct ThresholdKind {
  ThresholdVariant variant = ThresholdVariant::one_hole;
  int branch = 1;     // one_particle: 1..4
  int r = 2;          // one_string / multi_string species
  int n_p = 1;        // multi: number of particles
  int n_h = 1;        // multi / multi_string: number of holes
  int n_st = 1;       // multi_string: number of r-strings
  int ell_plus = 1;   // one_hole Umklapp split (ell_+ + ell_- = 1)
  int ell_minus = 0;

  static ThresholdKind OneHole(int lp = 1, int lm = 0);
  static ThresholdKind OneParticle(int branch);
  static ThresholdKind OneString(int r);
  static ThresholdKind ParticleHole(int branch = 1);
  static ThresholdKind ParticleTwoHoles();
  static ThresholdKind Multi(int n_p, int n_h);
  static ThresholdKind MultiString(int n_st, int n_h, int r);

  std::string name() const;
};

// Sample flags.
inline constexpr unsigned kFlagGammaPole = 1u;     // Gamma argument at a pole
inline constexpr unsigned kFlagExponentZero = 2u;  // Delta_+- = 0 hypothesis fails
inline constexpr unsigned kFlagPPrimeZero = 4u;    // P'(t0) vanishes

struct ThresholdSample {
  double param = 0.0;  // t0 or k0, per variant
  double P0 = 0.0;
  double E0 = 0.0;
  double delta_plus = 0.0;
  double delta_minus = 0.0;
  double exponent = 0.0;             // power of |dw| in the singular part
  double amplitude_universal = 0.0;  // prefactor with the form factor set to 1
  double w_plus = 0.0;               // coefficient of Xi(+dw)
  double w_minus = 0.0;              // coefficient of Xi(-dw)
  unsigned flags = 0;

  bool degenerate() const { return flags != 0; }
};

// Evaluate the curve at the given parameter grid (t0 or k0 values inside the
// variant's domain).
std::vector<ThresholdSample> threshold_curve(const ThresholdKind& kind,
                                             const std::vector<double>& grid,
                                             const VelocityAtlas& atlas);

// Equispaced grid of n points inside the variant's parameter domain, with a
// small margin off the open-interval endpoints.
std::vector<double> default_parameter_grid(const ThresholdKind& kind,
                                           const VelocityAtlas& atlas, int n,
                                           double margin_fraction = 5e-3);

// Predicted singular part amp * |dw|^exponent * (w_+ Xi(dw) + w_- Xi(-dw)).
std::vector<double> singular_profile(const ThresholdSample& sample,
                                     const std::vector<double>& dw_grid);

struct Figure1Row {
  std::string kind;
  ThresholdSample sample;
  double k = 0.0;  // momentum folded to [0, 2pi), incl. mirror partners
};

// All singularity curves built from at most two holes / two 1-strings,
// plus their mirror images about k = pi.
std::vector<Figure1Row> figure1_dataset(const VelocityAtlas& atlas,
                                        int points_per_curve = 64);

}  // namespace xxz
