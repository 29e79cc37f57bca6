// SPDX-License-Identifier: Apache-2.0

#include "pinris/energy.hpp"

#include <stdexcept>

namespace pinris {

namespace {

EnergyBreakdown finish(EnergyBreakdown e, double sum_rate, double bandwidth_hz) {
  if (sum_rate < 0.0) throw std::invalid_argument("energy efficiency: negative sum rate");
  e.total_w = e.radiated_w + e.amplifier_overhead_w + e.static_w;
  if (!(e.total_w > 0.0)) throw std::invalid_argument("energy efficiency: total power must be positive");
  e.ee_bits_per_joule = bandwidth_hz * sum_rate / e.total_w;
  return e;
}

}  // namespace

EnergyBreakdown ee_pinching(double sum_rate_bps_hz, const PowerModel& power) {
  const double nu = power.amplifier_efficiency;
  if (!(nu > 0.0 && nu <= 1.0)) throw std::invalid_argument("amplifier_efficiency out of (0,1]");
  const double p = power.per_user_power_w;
  EnergyBreakdown e;
  e.radiated_w = 2.0 * p;  // relay P + two users at P/2
  e.amplifier_overhead_w = p / nu - p;
  e.static_w = power.relay_static_w + 2.0 * power.ue_static_w;
  return finish(e, sum_rate_bps_hz, power.bandwidth_hz);
}

double ris_power_w(std::uint32_t num_elements, double phase_shifter_w) {
  return static_cast<double>(num_elements) * phase_shifter_w;
}

EnergyBreakdown ee_ris(double sum_rate_bps_hz, const PowerModel& power, std::uint32_t num_elements) {
  if (num_elements == 0) throw std::invalid_argument("ee_ris: need at least one element");
  EnergyBreakdown e;
  e.radiated_w = 2.0 * power.per_user_power_w;
  e.static_w = ris_power_w(num_elements, power.phase_shifter_w) + 2.0 * power.ue_static_w;
  return finish(e, sum_rate_bps_hz, power.bandwidth_hz);
}

}  // namespace pinris
