// SPDX-License-Identifier: Apache-2.0

#include "pinris/ris.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pinris/channel.hpp"
#include "pinris/pinching.hpp"

namespace pinris {

namespace {

constexpr std::size_t kElementChunk = 512;

void check_epsilon(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("phase noise severity out of [0,1]: " + std::to_string(epsilon));
  }
}

}  // namespace

std::string_view to_string(RisPreLog prelog) { return prelog == RisPreLog::Half ? "half" : "printed"; }

RisPreLog parse_prelog(std::string_view text) {
  if (text == "half") return RisPreLog::Half;
  if (text == "printed") return RisPreLog::Printed;
  throw ConfigError("unknown ris_prelog '" + std::string(text) + "' (half|printed)");
}

RisRealization draw_ris_realization(std::uint32_t num_elements, double rician_factor, double epsilon,
                                    const mc::TrialContext& ctx) {
  check_epsilon(epsilon);
  const auto params = RicianParams::from_factor(rician_factor);
  RisRealization r;
  r.incident.resize(num_elements);
  r.reflected.resize(num_elements);
  r.phase_errors.resize(num_elements);
  double re = 0.0;
  double im = 0.0;
  for (std::uint32_t m = 0; m < num_elements; ++m) {
    const auto key = ctx.key();
    r.incident[m] = rician_envelope(
        rng::philox4x32_10(rng::make_counter(m, ctx.trial(), rng::Stream::Incident), key), params);
    r.reflected[m] = rician_envelope(
        rng::philox4x32_10(rng::make_counter(m, ctx.trial(), rng::Stream::Reflected), key), params);
    r.phase_errors[m] = epsilon == 0.0 ? 0.0
                                       : kernels::phase_error(rng::philox4x32_10(rng::make_counter(
                                                                  m, ctx.trial(), rng::Stream::PhaseNoise),
                                                                  key),
                                                              epsilon);
    const double w = r.incident[m] * r.reflected[m];
    re += w * std::cos(r.phase_errors[m]);
    im += w * std::sin(r.phase_errors[m]);
  }
  r.effective_gain = re * re + im * im;
  return r;
}

double ris_effective_gain(std::span<const double> incident, std::span<const double> reflected, double epsilon,
                          const mc::TrialContext& ctx, const kernels::KernelTable& kernels) {
  check_epsilon(epsilon);
  if (incident.size() != reflected.size()) {
    throw std::invalid_argument("ris_effective_gain: amplitude vectors differ in length");
  }
  if (incident.empty()) throw std::invalid_argument("ris_effective_gain: need at least one element");

  if (epsilon == 0.0) {
    const double coherent = kernels.dot(incident, reflected);
    return coherent * coherent;
  }
  std::array<double, kElementChunk> weights;
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t first = 0; first < incident.size(); first += kElementChunk) {
    const std::size_t n = std::min(kElementChunk, incident.size() - first);
    for (std::size_t i = 0; i < n; ++i) weights[i] = incident[first + i] * reflected[first + i];
    const kernels::ElementRange range{ctx.key(), ctx.trial(), static_cast<std::uint32_t>(first)};
    sum += kernels.phase_noise_sum(range, epsilon, std::span<const double>(weights.data(), n));
  }
  return std::norm(sum);
}

void sample_ris_gains(const mc::TrialContext& ctx, double rician_factor, double epsilon,
                      std::span<const std::uint32_t> checkpoints, std::span<RisGainSample> out,
                      const kernels::KernelTable& kernels) {
  check_epsilon(epsilon);
  if (checkpoints.size() != out.size()) throw std::invalid_argument("sample_ris_gains: size mismatch");
  const auto params = RicianParams::from_factor(rician_factor);

  std::array<double, kElementChunk> incident;
  std::array<double, kElementChunk> reflected;
  std::array<double, kElementChunk> weights;
  double coherent = 0.0;
  std::complex<double> impaired{0.0, 0.0};
  std::uint32_t m = 0;

  for (std::size_t c = 0; c < checkpoints.size(); ++c) {
    const std::uint32_t target = checkpoints[c];
    if (target == 0 || target < m || (c > 0 && target == checkpoints[c - 1])) {
      throw std::invalid_argument("sample_ris_gains: checkpoints must be positive and strictly increasing");
    }
    while (m < target) {
      const std::size_t n = std::min<std::size_t>(kElementChunk, target - m);
      const kernels::ElementRange range{ctx.key(), ctx.trial(), m};
      std::span<double> a(incident.data(), n);
      std::span<double> b(reflected.data(), n);
      kernels.rician_amplitudes(range, rng::Stream::Incident, params, a);
      kernels.rician_amplitudes(range, rng::Stream::Reflected, params, b);
      coherent += kernels.dot(a, b);
      if (epsilon > 0.0) {
        for (std::size_t i = 0; i < n; ++i) weights[i] = incident[i] * reflected[i];
        impaired += kernels.phase_noise_sum(range, epsilon, std::span<const double>(weights.data(), n));
      }
      m += static_cast<std::uint32_t>(n);
    }
    out[c].coherent = coherent * coherent;
    out[c].impaired = epsilon > 0.0 ? std::norm(impaired) : out[c].coherent;
  }
}

double ris_snr(double power_w, double gain, double noise_w, const ScenarioGeometry& geometry,
               const RisConfig& ris, const UserPositions& users) {
  const double h2 = geometry.height_m * geometry.height_m;
  const double r1 = std::sqrt(users.x1 * users.x1 + users.y1 * users.y1 + h2);
  const double r2 = std::sqrt(users.x2 * users.x2 + users.y2 * users.y2 + h2);
  if (!(r1 > 0.0 && r2 > 0.0)) throw std::invalid_argument("ris_snr: user coincides with the RIS");
  const double loss1 = sv_path_loss_linear(r1, ris.pl_offset_db, ris.pl_exponent, ris.shadow_db);
  const double loss2 = sv_path_loss_linear(r2, ris.pl_offset_db, ris.pl_exponent, ris.shadow_db);
  return power_w * gain / (noise_w * loss1 * loss2);
}

double ris_gain_second_moment(std::uint32_t num_elements, double rician_factor) {
  return ris_mean_gain(num_elements, rician_factor, 0.0);
}

double phase_noise_factor(double epsilon) {
  check_epsilon(epsilon);
  if (epsilon == 0.0) return 1.0;
  const double x = epsilon * std::numbers::pi;
  return std::sin(x) / x;
}

double ris_mean_gain(std::uint32_t num_elements, double rician_factor, double epsilon) {
  const double m = static_cast<double>(num_elements);
  const double mean_amp = rician_mean_amplitude(rician_factor);
  const double coherence = mean_amp * mean_amp * phase_noise_factor(epsilon);
  return m + (m * m - m) * coherence * coherence;
}

mc::McEstimate ris_rate_mc(const Scenario& scenario, const mc::McOptions& options, UserPlacement placement,
                           const kernels::KernelTable& kernels) {
  validate(scenario);
  const std::uint32_t checkpoint[1] = {scenario.ris.num_elements};
  const double eps = scenario.ris.phase_noise_severity;
  return mc::estimate(
      [&](const mc::TrialContext& ctx) {
        auto stream = ctx.stream(rng::Stream::Geometry);
        const auto users = draw_user_positions(scenario.geometry, placement, stream);
        RisGainSample gain[1];
        sample_ris_gains(ctx, scenario.ris.rician_factor, eps, checkpoint, gain, kernels);
        return two_slot_rate(ris_snr(scenario.power.per_user_power_w, gain[0].impaired,
                                     scenario.power.noise_power_w, scenario.geometry, scenario.ris, users));
      },
      options);
}

double ris_rate_closed_form(const Scenario& scenario, RisPreLog prelog) {
  validate(scenario);
  const auto& g = scenario.geometry;
  const UserPositions centers = place_users(g, UserPlacement::Center, {0.0, 0.0, 0.0, 0.0});
  const double mean_gain = ris_gain_second_moment(scenario.ris.num_elements, scenario.ris.rician_factor);
  const double snr = ris_snr(scenario.power.per_user_power_w, mean_gain, scenario.power.noise_power_w, g,
                             scenario.ris, centers);
  const double pre = prelog == RisPreLog::Half ? 0.5 : 1.0;
  return pre * std::log2(1.0 + snr);
}

double ris_jensen_bound(const Scenario& scenario) {
  validate(scenario);
  const auto& g = scenario.geometry;
  const UserPositions centers = place_users(g, UserPlacement::Center, {0.0, 0.0, 0.0, 0.0});
  const double mean_gain =
      ris_mean_gain(scenario.ris.num_elements, scenario.ris.rician_factor, scenario.ris.phase_noise_severity);
  return two_slot_rate(ris_snr(scenario.power.per_user_power_w, mean_gain, scenario.power.noise_power_w, g,
                               scenario.ris, centers));
}

}  // namespace pinris
