// SPDX-License-Identifier: Apache-2.0

#include "pinris/pinching.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "pinris/channel.hpp"

namespace pinris {

double waveguide_loss_linear(Feeder feeder, double pin_x_m, const ScenarioGeometry& geometry,
                             double loss_db_per_m) {
  if (feeder == Feeder::Ideal) return 1.0;

  const double half = geometry.waveguide_half_length_m();
  if (!(std::abs(pin_x_m) <= half * (1.0 + 1e-12))) {
    throw std::out_of_range("pinching antenna at x = " + std::to_string(pin_x_m) +
                            " m is outside the waveguide [-" + std::to_string(half) + ", " +
                            std::to_string(half) + "]");
  }
  const double run_m = feeder == Feeder::EndFeeder ? std::abs(pin_x_m + half) : std::abs(pin_x_m);
  return std::pow(10.0, -loss_db_per_m * run_m / 10.0);
}

PinchingLinkBudget pinching_link(double power_w, double noise_w, double eta, const ScenarioGeometry& geometry,
                                 double y_m, const PinchingConfig& pinching, double pin_x_m) {
  const double h = geometry.height_m;
  if (!(h > 0.0)) throw std::invalid_argument("pinching_snr: height must be positive");
  if (!(noise_w > 0.0)) throw std::invalid_argument("pinching_snr: noise power must be positive");
  if (!(power_w >= 0.0)) throw std::invalid_argument("pinching_snr: power must be nonnegative");

  PinchingLinkBudget link;
  link.user_y_m = y_m;
  link.transmit_power_w = 0.5 * power_w;
  link.effective_power_w =
      pinching.emission_fraction *
      waveguide_loss_linear(pinching.feeder, pin_x_m, geometry, pinching.waveguide_loss_db_per_m) *
      link.transmit_power_w;
  link.snr = link.effective_power_w * eta / (noise_w * (h * h + y_m * y_m));
  return link;
}

double pinching_snr(double power_w, double noise_w, double eta, const ScenarioGeometry& geometry, double y_m,
                    const PinchingConfig& pinching, double pin_x_m) {
  return pinching_link(power_w, noise_w, eta, geometry, y_m, pinching, pin_x_m).snr;
}

double four_slot_rate(double snr_first_hop, double snr_second_hop) {
  return 0.25 * std::log2(1.0 + std::min(snr_first_hop, snr_second_hop));
}

double two_slot_rate(double snr) { return 0.5 * std::log2(1.0 + snr); }

PinchingTrialRates pinching_trial_rates(const Scenario& s, const UserPositions& users, double eta) {
  const auto& p = s.power;
  const double snr1 = pinching_snr(p.per_user_power_w, p.noise_power_w, eta, s.geometry, users.y1, s.pinching,
                                   users.x1);
  const double snr2 = pinching_snr(p.per_user_power_w, p.noise_power_w, eta, s.geometry, users.y2, s.pinching,
                                   users.x2);
  // U1's rate: U2 -> relay (snr2), relay -> U1 (snr1); U2's rate: the reverse.
  return {four_slot_rate(snr2, snr1), four_slot_rate(snr1, snr2)};
}

mc::McEstimate pinching_rate_mc(const Scenario& scenario, const mc::McOptions& options,
                                UserPlacement placement) {
  validate(scenario);
  const double eta = free_space_gain(scenario.geometry.carrier_frequency_hz);
  return mc::estimate(
      [&](const mc::TrialContext& ctx) {
        auto stream = ctx.stream(rng::Stream::Geometry);
        const auto users = draw_user_positions(scenario.geometry, placement, stream);
        return pinching_trial_rates(scenario, users, eta).user2;
      },
      options);
}

double pinching_rate_closed_form(const Scenario& scenario) {
  validate(scenario);
  if (scenario.pinching.feeder != Feeder::Ideal || scenario.pinching.emission_fraction != 1.0) {
    throw std::invalid_argument("pinching_rate_closed_form: only defined for ideal pinching hardware");
  }
  const auto& g = scenario.geometry;
  const double eta = free_space_gain(g.carrier_frequency_hz);
  const double snr_scale = eta * scenario.power.per_user_power_w / (2.0 * scenario.power.noise_power_w);
  const double h = g.height_m;
  const double side = g.region_side_m;
  const double log2e = std::numbers::log2e;
  const double c = std::sqrt(h * h + snr_scale);
  const double quarter_side_sq = side * side / 4.0;

  return 0.25 * (std::log2(quarter_side_sq + h * h + snr_scale) +
                 (4.0 / side) * log2e * c * std::atan(side / (2.0 * c)) -
                 std::log2(quarter_side_sq + h * h) -
                 (4.0 / side) * log2e * h * std::atan(side / (2.0 * h)));
}

double passive_pinching_snr(const Scenario& s, const UserPositions& users, double eta) {
  const double h = s.geometry.height_m;
  if (!(h > 0.0)) throw std::invalid_argument("passive_pinching_snr: height must be positive");
  const double d1 = h * h + users.y1 * users.y1;
  const double d2 = h * h + users.y2 * users.y2;
  double gain = s.pinching.emission_fraction;
  if (s.pinching.feeder != Feeder::Ideal) {
    gain *= std::pow(10.0, -s.pinching.waveguide_loss_db_per_m * std::abs(users.x1 - users.x2) / 10.0);
  }
  return gain * eta * eta * s.power.per_user_power_w / (s.power.noise_power_w * d1 * d2);
}

mc::McEstimate passive_pinching_rate_mc(const Scenario& scenario, const mc::McOptions& options,
                                        UserPlacement placement) {
  validate(scenario);
  const double eta = free_space_gain(scenario.geometry.carrier_frequency_hz);
  return mc::estimate(
      [&](const mc::TrialContext& ctx) {
        auto stream = ctx.stream(rng::Stream::Geometry);
        const auto users = draw_user_positions(scenario.geometry, placement, stream);
        return two_slot_rate(passive_pinching_snr(scenario, users, eta));
      },
      options);
}

}  // namespace pinris
