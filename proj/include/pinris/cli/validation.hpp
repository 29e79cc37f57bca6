// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "pinris/config.hpp"
#include "pinris/kernels/kernels.hpp"
#include "pinris/mc.hpp"

namespace pinris::cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;  // absolute
  std::string detail;
};

struct ValidationOptions {
  mc::McOptions mc{100000, 1, 0};
  double mc_eta_scale = 1.0;
};

/// Closed forms against simulation:
///   pinching closed form vs symmetric-user MC at 0..20 dBm (|diff| <= 2 x CI95),
///   RIS gain second moment at M = 8, 64, 512 (1 %),
///   uniform phase-noise coherence factor at M = 256 (1 %),
///   Jensen ordering of the RIS rate at region centers,
///   passive pinching below active pinching over -10..50 dBm.
std::vector<CheckResult> run_validation(const Scenario& scenario, const ValidationOptions& options,
                                        const kernels::KernelTable& kernels = kernels::best_kernels());

std::string format_check(const CheckResult& check);

}  // namespace pinris::cli
