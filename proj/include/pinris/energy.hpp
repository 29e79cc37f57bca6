// SPDX-License-Identifier: Apache-2.0
//
// Power consumption and energy efficiency (bits per joule).

#pragma once

#include <cstdint>

#include "pinris/config.hpp"

namespace pinris {

struct EnergyBreakdown {
  double radiated_w = 0.0;
  double amplifier_overhead_w = 0.0;
  double static_w = 0.0;
  double total_w = 0.0;
  double ee_bits_per_joule = 0.0;
};

/// Relay radiates P_k (P/nu drawn), each user P_k / 2:
/// total = P/nu + P_RE + sum_k (P/2 + P_UE).
EnergyBreakdown ee_pinching(double sum_rate_bps_hz, const PowerModel& power);

/// P_RIS = M P_ph-sh.
double ris_power_w(std::uint32_t num_elements, double phase_shifter_w);

/// total = M P_ph-sh + sum_k (P + P_UE).
EnergyBreakdown ee_ris(double sum_rate_bps_hz, const PowerModel& power, std::uint32_t num_elements);

}  // namespace pinris
