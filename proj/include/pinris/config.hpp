// SPDX-License-Identifier: Apache-2.0
//
// Scenario parameters for the pinching-antenna / RIS comparison.
// All powers are stored in watts; dBm only appears at the text boundary.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pinris {

/// Two square service regions of side L, centered at (+-(d + L/2), 0, 0).
/// The waveguide (pinching) or the RIS sits at height h above the origin.
struct ScenarioGeometry {
  double carrier_frequency_hz = 28e9;
  double height_m = 3.0;
  double region_offset_m = 25.0;
  double region_side_m = 10.0;

  /// Half-extent of the waveguide along x; it spans both regions.
  double waveguide_half_length_m() const { return region_offset_m + region_side_m; }
  /// |x| of a region center.
  double region_center_x_m() const { return region_offset_m + 0.5 * region_side_m; }
};

struct PowerModel {
  double per_user_power_w = 0.0316227766016838;  // 15 dBm
  double noise_power_w = 1e-11;                  // -80 dBm
  double bandwidth_hz = 1e9;
  double amplifier_efficiency = 0.5;
  double relay_static_w = 0.01;
  double ue_static_w = 0.01;
  double phase_shifter_w = 0.0175;
};

struct RisConfig {
  std::uint32_t num_elements = 10000;
  double rician_factor = 10.0;
  double phase_noise_severity = 0.5;
  double pl_offset_db = 61.4;
  double pl_exponent = 2.0;
  double shadow_db = 0.0;
};

enum class Feeder { Ideal, EndFeeder, MidFeeder };

struct PinchingConfig {
  double emission_fraction = 1.0;
  double waveguide_loss_db_per_m = 0.08;
  Feeder feeder = Feeder::Ideal;
};

struct Scenario {
  ScenarioGeometry geometry;
  PowerModel power;
  RisConfig ris;
  PinchingConfig pinching;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
  ConfigError(const std::string& what, std::vector<std::string> violations)
      : std::runtime_error(what), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

double dbm_to_w(double dbm);
double w_to_dbm(double watts);

/// Simulation parameters from the reference parameter table, with a 15 dBm
/// transmit power and M = 10^4 RIS elements.
Scenario default_table1();

/// Every violated invariant, one message each; empty means valid.
std::vector<std::string> validation_errors(const Scenario& scenario);

/// Returns the scenario unchanged, or throws ConfigError listing violations.
const Scenario& validate(const Scenario& scenario);

std::string_view to_string(Feeder feeder);
Feeder parse_feeder(std::string_view text);

// --- text form ---------------------------------------------------------------
//
// Flat "key = value" lines, '#' starts a comment. Keys follow the parameter
// table rows. Powers may be given in dBm (`*_dbm`) or watts (`*_w`); the
// serializer always writes the canonical SI keys.

/// Applies a single key/value to the scenario. Returns false for unknown keys.
bool apply_setting(Scenario& scenario, std::string_view key, std::string_view value);

/// Keys accepted by apply_setting (canonical and alias forms).
const std::vector<std::string>& setting_keys();

struct KeyValue {
  std::string key;
  std::string value;
  int line = 0;
};

/// Splits config text into key/value pairs; throws ConfigError on syntax errors.
std::vector<KeyValue> parse_key_values(std::string_view text);

/// Parses a config text on top of `base` (the defaults unless given).
Scenario parse_config(std::string_view text, const Scenario& base = default_table1());

/// Canonical serialization: fixed key order, shortest round-trip numbers.
std::string serialize(const Scenario& scenario);

std::string read_text_file(const std::string& path);

/// Shortest decimal string that parses back to the same double.
std::string format_roundtrip(double value);
double parse_double(std::string_view text, std::string_view what);

}  // namespace pinris
