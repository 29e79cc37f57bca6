// SPDX-License-Identifier: Apache-2.0
//
// Four-slot pinching-antenna relay. In each slot a single antenna is
// activated at (x_k, 0, h), right above the served user, and users as well
// as the relay transmit with P_k / 2.

#pragma once

#include "pinris/config.hpp"
#include "pinris/mc.hpp"
#include "pinris/placement.hpp"

namespace pinris {

struct PinchingLinkBudget {
  double user_y_m = 0.0;
  double transmit_power_w = 0.0;   // P_k / 2
  double effective_power_w = 0.0;  // after emission fraction and waveguide loss
  double snr = 0.0;
};

/// Linear attenuation in (0, 1] between the feed point and an antenna at pin_x.
/// End feeder sits at x = -(d+L); mid feeders at the origin.
/// Throws std::out_of_range when pin_x lies outside [-(d+L), d+L] (non-ideal feeders only).
double waveguide_loss_linear(Feeder feeder, double pin_x_m, const ScenarioGeometry& geometry,
                             double loss_db_per_m);

/// `power_w` is the per-user budget P_k; each slot radiates half of it.
PinchingLinkBudget pinching_link(double power_w, double noise_w, double eta, const ScenarioGeometry& geometry,
                                 double y_m, const PinchingConfig& pinching, double pin_x_m);

double pinching_snr(double power_w, double noise_w, double eta, const ScenarioGeometry& geometry, double y_m,
                    const PinchingConfig& pinching, double pin_x_m);

/// 1/4 log2(1 + min(a, b)): decode-and-forward over four slots.
double four_slot_rate(double snr_first_hop, double snr_second_hop);
/// 1/2 log2(1 + snr)
double two_slot_rate(double snr);

struct PinchingTrialRates {
  double user1 = 0.0;
  double user2 = 0.0;
  double sum() const { return user1 + user2; }
};

/// Rates for one user drop. U_k's rate is limited by the U_k' -> relay hop
/// (antenna at x_k') and the relay -> U_k hop (antenna at x_k).
PinchingTrialRates pinching_trial_rates(const Scenario& scenario, const UserPositions& users, double eta);

/// Mean per-user rate of U2, the user at the far end of an end-fed waveguide.
mc::McEstimate pinching_rate_mc(const Scenario& scenario, const mc::McOptions& options,
                                UserPlacement placement = UserPlacement::Uniform);

/// Closed-form average rate for symmetric user locations (y1 = y2).
/// Throws std::invalid_argument unless the pinching hardware is ideal.
double pinching_rate_closed_form(const Scenario& scenario);

/// Two-slot passive scheme U1 -> antenna 1 -> waveguide -> antenna 2 -> U2:
/// eta^2 P / (sigma^2 |d1|^2 |d2|^2), times the waveguide loss over |x1 - x2|
/// when a lossy feeder mode is configured.
double passive_pinching_snr(const Scenario& scenario, const UserPositions& users, double eta);

mc::McEstimate passive_pinching_rate_mc(const Scenario& scenario, const mc::McOptions& options,
                                        UserPlacement placement = UserPlacement::Uniform);

}  // namespace pinris
