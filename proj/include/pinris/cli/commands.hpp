// SPDX-License-Identifier: Apache-2.0
//
// Subcommand implementations behind the `pinris` executable. They return the
// produced text so tests can check output without spawning the binary.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pinris/config.hpp"
#include "pinris/experiments.hpp"
#include "pinris/placement.hpp"
#include "pinris/ris.hpp"

namespace pinris::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommandInputs {
  /// Config-file entries followed by flag overrides; later entries win.
  std::vector<KeyValue> overrides;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  unsigned workers = 0;
  std::string kernel = "auto";
  std::optional<UserPlacement> pa_placement;
  std::optional<UserPlacement> ris_placement;
  std::optional<RisPreLog> prelog;
  std::optional<std::string> grid;
};

struct CommandOutput {
  std::string csv;      // file/stdout payload
  std::string summary;  // human-readable notes for stderr
  int exit_code = 0;
};

/// Defaults, then `preset`, then the overrides in order.
Scenario resolve_scenario(const CommandInputs& inputs, void (*preset)(Scenario&) = nullptr);

bool overrides_key(const CommandInputs& inputs, std::string_view key);

CommandOutput cmd_fig2(const CommandInputs& inputs);
CommandOutput cmd_fig3(const CommandInputs& inputs);
/// Requires an explicit ris_elements override.
CommandOutput cmd_fig4(const CommandInputs& inputs);
/// Runs a sweep described by a key/value spec file (see README).
CommandOutput cmd_sweep(std::string_view spec_text, const CommandInputs& inputs);

/// Closed-form vs Monte-Carlo checks. `mc_eta_scale` multiplies the
/// free-space gain on the simulation side only (fault injection).
CommandOutput cmd_validate(const CommandInputs& inputs, double mc_eta_scale = 1.0);

}  // namespace pinris::cli
