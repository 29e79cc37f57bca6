// SPDX-License-Identifier: Apache-2.0
//
// Channel primitives shared by both relaying schemes.

#pragma once

#include <cmath>
#include <numbers>

#include "pinris/rng.hpp"

namespace pinris {

inline constexpr double kSpeedOfLight = 299792458.0;

/// Free-space gain constant c^2 / (16 pi^2 f_c^2).
double free_space_gain(double carrier_frequency_hz);

/// a + 10 b log10(r) + shadow, in dB.
double sv_path_loss_db(double distance_m, double a_db, double b, double shadow_db = 0.0);
double sv_path_loss_linear(double distance_m, double a_db, double b, double shadow_db = 0.0);

/// Unit mean-square Rician envelope: |los + scatter * (n1 + j n2)| with
/// n1, n2 ~ N(0, 1), los^2 = K/(K+1), 2 scatter^2 = 1/(K+1).
struct RicianParams {
  double los = 0.0;
  double scatter = 0.0;

  /// K = +inf gives the deterministic unit envelope.
  static RicianParams from_factor(double rician_factor);
};

/// Box-Muller on [0,1) uniforms. The angle is taken on [-pi, pi).
struct GaussianPair {
  double first;
  double second;
};

inline GaussianPair box_muller(double u_radius, double u_angle) {
  const double r = std::sqrt(-2.0 * std::log(1.0 - u_radius));
  const double theta = std::numbers::pi * (2.0 * u_angle - 1.0);
  return {r * std::cos(theta), r * std::sin(theta)};
}

inline double rician_envelope(double u_radius, double u_angle, RicianParams p) {
  const auto n = box_muller(u_radius, u_angle);
  const double re = p.los + p.scatter * n.first;
  const double im = p.scatter * n.second;
  return std::sqrt(re * re + im * im);
}

/// Envelope drawn from one Philox block (words 0-1 radius, 2-3 angle).
inline double rician_envelope(const rng::PhiloxCounter& block, RicianParams p) {
  return rician_envelope(rng::to_unit(block[0], block[1]), rng::to_unit(block[2], block[3]), p);
}

/// Draws one amplitude from the substream (consumes two uniforms).
double sample_rician_amplitude(double rician_factor, rng::Substream& stream);

/// L_{1/2}(x) for x <= 0 via e^{x/2} [(1-x) I0(-x/2) - x I1(-x/2)].
double laguerre_half(double x);

/// E[envelope] = sqrt(pi / (4(K+1))) L_{1/2}(-K); 1 for K = +inf.
double rician_mean_amplitude(double rician_factor);

/// e^{-z} I_nu(z) for nu in {0, 1}, z >= 0.
double scaled_bessel_i(int order, double z);

}  // namespace pinris
