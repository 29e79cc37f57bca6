// SPDX-License-Identifier: Apache-2.0

#include "pinris/cli/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "pinris/channel.hpp"
#include "pinris/pinching.hpp"
#include "pinris/ris.hpp"

namespace pinris::cli {

namespace {

CheckResult make(std::string name, double measured, double expected, double tolerance, std::string detail = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.measured = measured;
  c.expected = expected;
  c.tolerance = tolerance;
  c.pass = std::abs(measured - expected) <= tolerance;
  c.detail = std::move(detail);
  return c;
}

std::string fmt(const char* pattern, double v) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), pattern, v);
  return buf;
}

mc::McEstimate mean_gain(const mc::McOptions& options, std::uint32_t elements, double rician_factor,
                         double epsilon, const kernels::KernelTable& kernels) {
  const std::uint32_t checkpoint[1] = {elements};
  return mc::estimate(
      [&](const mc::TrialContext& ctx) {
        RisGainSample g[1];
        sample_ris_gains(ctx, rician_factor, epsilon, checkpoint, g, kernels);
        return g[0].impaired;
      },
      options);
}

}  // namespace

std::vector<CheckResult> run_validation(const Scenario& scenario, const ValidationOptions& options,
                                        const kernels::KernelTable& kernels) {
  validate(scenario);
  std::vector<CheckResult> checks;

  // Pinching closed form vs simulation with y1 = y2.
  for (double p_dbm : {0.0, 5.0, 10.0, 15.0, 20.0}) {
    Scenario s = scenario;
    s.power.per_user_power_w = dbm_to_w(p_dbm);
    s.pinching = PinchingConfig{1.0, s.pinching.waveguide_loss_db_per_m, Feeder::Ideal};
    const double eta = free_space_gain(s.geometry.carrier_frequency_hz) * options.mc_eta_scale;
    const auto est = mc::estimate(
        [&](const mc::TrialContext& ctx) {
          auto stream = ctx.stream(rng::Stream::Geometry);
          const auto users = draw_user_positions(s.geometry, UserPlacement::Symmetric, stream);
          return pinching_trial_rates(s, users, eta).user2;
        },
        options.mc);
    checks.push_back(make(fmt("pinching_closed_form_vs_mc@%gdBm", p_dbm), est.mean, pinching_rate_closed_form(s),
                          2.0 * est.ci_half_width_95, "tolerance = 2 x CI95"));
  }

  // RIS gain second moment under Rician fading.
  for (std::uint32_t m : {8u, 64u, 512u}) {
    const auto est = mean_gain(options.mc, m, scenario.ris.rician_factor, 0.0, kernels);
    const double expected = ris_gain_second_moment(m, scenario.ris.rician_factor);
    checks.push_back(make("ris_gain_second_moment@M=" + std::to_string(m), est.mean, expected, 0.01 * expected,
                          "tolerance = 1 %"));
  }

  // Uniform phase noise with unit amplitudes: E[e^{j err}] = sinc factor.
  {
    constexpr std::uint32_t m = 256;
    const double eps = 0.5;
    const auto est = mean_gain(options.mc, m, std::numeric_limits<double>::infinity(), eps, kernels);
    const double expected = ris_mean_gain(m, std::numeric_limits<double>::infinity(), eps);
    checks.push_back(make("phase_noise_coherence@M=256,eps=0.5", est.mean, expected, 0.01 * expected,
                          "expected M + (M^2-M)(2/pi)^2, tolerance = 1 %"));
  }

  // Jensen: simulated rate at region centers sits below the closed-form bound.
  // The raw mean is noisy at the scale of the gap, so the ordering is also
  // checked on the tangent-line control variate, which is <= bound per trial.
  {
    mc::McOptions jensen_mc = options.mc;
    jensen_mc.trials = std::min<std::uint64_t>(jensen_mc.trials, 20000);
    for (std::uint32_t m : {1u, 16u, 256u, 4096u, 16384u}) {
      Scenario s = scenario;
      s.ris.num_elements = m;
      s.ris.phase_noise_severity = 0.0;
      const auto centers = place_users(s.geometry, UserPlacement::Center, {0.0, 0.0, 0.0, 0.0});
      const double bound = ris_rate_closed_form(s, RisPreLog::Half);
      const double mean_snr = ris_snr(s.power.per_user_power_w, ris_gain_second_moment(m, s.ris.rician_factor),
                                      s.power.noise_power_w, s.geometry, s.ris, centers);
      const std::uint32_t checkpoint[1] = {m};
      const auto est = mc::estimate_many(
          2,
          [&](const mc::TrialContext& ctx, std::span<double> out) {
            RisGainSample g[1];
            sample_ris_gains(ctx, s.ris.rician_factor, 0.0, checkpoint, g, kernels);
            const double snr =
                ris_snr(s.power.per_user_power_w, g[0].coherent, s.power.noise_power_w, s.geometry, s.ris, centers);
            out[0] = two_slot_rate(snr);
            // log1p(z) - z <= 0: deviation of the rate from its tangent at the mean snr
            const double z = (snr - mean_snr) / (1.0 + mean_snr);
            out[1] = 0.5 * (std::log1p(z) - z) / std::numbers::ln2;
          },
          jensen_mc);
      CheckResult c;
      c.name = "ris_jensen_ordering@M=" + std::to_string(m);
      c.measured = bound + est[1].mean;
      c.expected = bound;
      c.tolerance = 2.0 * est[0].ci_half_width_95;
      c.pass = est[1].mean <= 0.0 && est[0].mean <= bound + c.tolerance && -est[1].mean < 0.05 * bound;
      c.detail = "control-variate mean <= bound, raw mean " + fmt("%.9g", est[0].mean) + " <= bound + 2 x CI95";
      checks.push_back(c);
    }
  }

  // Passive pinching never beats the active relay.
  {
    mc::McOptions pp = options.mc;
    pp.trials = std::min<std::uint64_t>(pp.trials, 10000);
    double worst_margin = std::numeric_limits<double>::infinity();
    for (double p_dbm = -10.0; p_dbm <= 50.0; p_dbm += 5.0) {
      Scenario s = scenario;
      s.power.per_user_power_w = dbm_to_w(p_dbm);
      s.pinching = PinchingConfig{1.0, s.pinching.waveguide_loss_db_per_m, Feeder::Ideal};
      const double active = pinching_rate_mc(s, pp).mean;
      const double passive = passive_pinching_rate_mc(s, pp).mean;
      worst_margin = std::min(worst_margin, active - passive);
    }
    CheckResult c;
    c.name = "passive_below_active@-10..50dBm";
    c.measured = worst_margin;
    c.expected = 0.0;
    c.pass = worst_margin > 0.0;
    c.detail = "min(active - passive) must be > 0";
    checks.push_back(c);
  }
  return checks;
}

std::string format_check(const CheckResult& c) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%s %-40s measured=%.9g expected=%.9g tol=%.3g  (%s)", c.pass ? "PASS" : "FAIL",
                c.name.c_str(), c.measured, c.expected, c.tolerance, c.detail.c_str());
  return buf;
}

}  // namespace pinris::cli
