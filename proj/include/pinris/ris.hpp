// SPDX-License-Identifier: Apache-2.0
//
// Two-slot RIS-assisted link with coherent phase design and optional
// uniform residual phase noise per element.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "pinris/config.hpp"
#include "pinris/kernels/kernels.hpp"
#include "pinris/mc.hpp"
#include "pinris/placement.hpp"

namespace pinris {

/// Pre-log of the closed-form RIS rate. `Half` carries the 1/2 of the
/// two-slot protocol; `Printed` omits it.
enum class RisPreLog { Half, Printed };

std::string_view to_string(RisPreLog prelog);
RisPreLog parse_prelog(std::string_view text);

struct RisRealization {
  std::vector<double> incident;      // delta_m
  std::vector<double> reflected;     // zeta_m
  std::vector<double> phase_errors;  // residual error after coherent design, radians
  double effective_gain = 0.0;       // |sum delta zeta e^{j err}|^2
};

/// Draws all M elements of one trial with the scalar reference path.
RisRealization draw_ris_realization(std::uint32_t num_elements, double rician_factor, double epsilon,
                                    const mc::TrialContext& ctx);

/// |sum_m a_m b_m e^{j err_m}|^2 with err_m ~ U[-eps pi, eps pi] taken from the
/// trial's PhaseNoise stream. eps = 0 returns (sum a b)^2 without complex math.
double ris_effective_gain(std::span<const double> incident, std::span<const double> reflected, double epsilon,
                          const mc::TrialContext& ctx,
                          const kernels::KernelTable& kernels = kernels::best_kernels());

struct RisGainSample {
  double coherent = 0.0;  // eps = 0
  double impaired = 0.0;  // eps as given (equals coherent when eps = 0)
};

/// Gains of the first M elements for every M in `checkpoints` (strictly
/// increasing), from a single pass over elements. The value at a checkpoint
/// is the same whatever other checkpoints are requested.
void sample_ris_gains(const mc::TrialContext& ctx, double rician_factor, double epsilon,
                      std::span<const std::uint32_t> checkpoints, std::span<RisGainSample> out,
                      const kernels::KernelTable& kernels = kernels::best_kernels());

/// P * gain / (sigma^2 L(r1) L(r2)), r_k the distance from U_k to (0, 0, h).
double ris_snr(double power_w, double gain, double noise_w, const ScenarioGeometry& geometry,
               const RisConfig& ris, const UserPositions& users);

/// M + (M^2 - M) E[delta]^2 E[zeta]^2 = M + (M^2 - M) pi^2 L_{1/2}(-K)^4 / (16 (K+1)^2)
double ris_gain_second_moment(std::uint32_t num_elements, double rician_factor);

/// E[e^{j err}] = sin(eps pi) / (eps pi)
double phase_noise_factor(double epsilon);

/// M + (M^2 - M) E[delta]^4 sinc(eps)^2: mean gain with fading and phase noise.
double ris_mean_gain(std::uint32_t num_elements, double rician_factor, double epsilon);

/// Per-user rate E[1/2 log2(1 + snr)] with eps taken from the scenario.
mc::McEstimate ris_rate_mc(const Scenario& scenario, const mc::McOptions& options,
                           UserPlacement placement = UserPlacement::Uniform,
                           const kernels::KernelTable& kernels = kernels::best_kernels());

/// Closed form with users at region centers and ideal phases.
double ris_rate_closed_form(const Scenario& scenario, RisPreLog prelog = RisPreLog::Half);

/// 1/2 log2(1 + E[snr]) for users at the region centers, with eps from the scenario.
double ris_jensen_bound(const Scenario& scenario);

}  // namespace pinris
