// SPDX-License-Identifier: Apache-2.0

#include "pinris/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace pinris {

double dbm_to_w(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double w_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

Scenario default_table1() {
  Scenario s;
  s.geometry = ScenarioGeometry{28e9, 3.0, 25.0, 10.0};
  s.power.per_user_power_w = dbm_to_w(15.0);
  s.power.noise_power_w = dbm_to_w(-80.0);
  s.power.bandwidth_hz = 1e9;
  s.power.amplifier_efficiency = 0.5;
  s.power.relay_static_w = dbm_to_w(10.0);
  s.power.ue_static_w = dbm_to_w(10.0);
  s.power.phase_shifter_w = 17.5e-3;
  s.ris = RisConfig{10000, 10.0, 0.5, 61.4, 2.0, 0.0};
  s.pinching = PinchingConfig{1.0, 0.08, Feeder::Ideal};
  return s;
}

namespace {

void require(std::vector<std::string>& out, bool ok, const std::string& message) {
  if (!ok) out.push_back(message);
}

bool positive(double v) { return std::isfinite(v) && v > 0.0; }
bool nonneg(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

std::vector<std::string> validation_errors(const Scenario& s) {
  std::vector<std::string> e;
  const auto& g = s.geometry;
  require(e, positive(g.carrier_frequency_hz), "carrier_frequency_hz must be finite and > 0");
  require(e, positive(g.height_m), "waveguide_ris_height_m must be finite and > 0");
  require(e, nonneg(g.region_offset_m), "distance_to_user_region_m must be finite and >= 0");
  require(e, positive(g.region_side_m), "user_region_side_length_m must be finite and > 0");

  const auto& p = s.power;
  require(e, positive(p.per_user_power_w), "transmit_power_w must be finite and > 0");
  require(e, positive(p.noise_power_w), "noise_power_w must be finite and > 0");
  require(e, positive(p.bandwidth_hz), "bandwidth_hz must be finite and > 0");
  require(e, std::isfinite(p.amplifier_efficiency) && p.amplifier_efficiency > 0.0 &&
                 p.amplifier_efficiency <= 1.0,
          "amplifier_efficiency out of (0,1]");
  require(e, nonneg(p.relay_static_w), "relay_equipment_power_w must be finite and >= 0");
  require(e, nonneg(p.ue_static_w), "user_equipment_power_w must be finite and >= 0");
  require(e, nonneg(p.phase_shifter_w), "phase_shifter_consumption_w must be finite and >= 0");

  const auto& r = s.ris;
  require(e, r.num_elements >= 1, "ris_elements must be a positive integer");
  require(e, nonneg(r.rician_factor), "rician_factor must be finite and >= 0");
  require(e, std::isfinite(r.phase_noise_severity) && r.phase_noise_severity >= 0.0 &&
                 r.phase_noise_severity <= 1.0,
          "phase_noise_severity out of [0,1]");
  require(e, std::isfinite(r.pl_offset_db), "path_loss_parameter_a_db must be finite");
  require(e, std::isfinite(r.pl_exponent), "path_loss_parameter_b must be finite");
  require(e, std::isfinite(r.shadow_db), "shadow_fading_db must be finite");

  const auto& pin = s.pinching;
  require(e, std::isfinite(pin.emission_fraction) && pin.emission_fraction >= 0.0 &&
                 pin.emission_fraction <= 1.0,
          "emission_fraction out of [0,1]");
  require(e, nonneg(pin.waveguide_loss_db_per_m), "waveguide_loss_db_per_m must be finite and >= 0");
  return e;
}

const Scenario& validate(const Scenario& scenario) {
  auto errors = validation_errors(scenario);
  if (!errors.empty()) {
    std::string msg = "invalid configuration:";
    for (const auto& err : errors) msg += "\n  " + err;
    throw ConfigError(msg, std::move(errors));
  }
  return scenario;
}

std::string_view to_string(Feeder feeder) {
  switch (feeder) {
    case Feeder::Ideal: return "ideal";
    case Feeder::EndFeeder: return "end";
    case Feeder::MidFeeder: return "mid";
  }
  return "ideal";
}

Feeder parse_feeder(std::string_view text) {
  if (text == "ideal") return Feeder::Ideal;
  if (text == "end" || text == "end_feeder") return Feeder::EndFeeder;
  if (text == "mid" || text == "mid_feeder") return Feeder::MidFeeder;
  throw ConfigError("unknown waveguide_feeder '" + std::string(text) + "' (ideal|end|mid)");
}

std::string format_roundtrip(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

double parse_double(std::string_view text, std::string_view what) {
  text = trim(text);
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw ConfigError("cannot parse " + std::string(what) + " value '" + std::string(text) + "'");
  }
  return v;
}

namespace {

using Setter = std::function<void(Scenario&, std::string_view)>;

template <class F>
Setter number(std::string key, F assign) {
  return [key = std::move(key), assign](Scenario& s, std::string_view v) {
    assign(s, parse_double(v, key));
  };
}

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = [] {
    std::map<std::string, Setter, std::less<>> t;
    auto add = [&t](const std::string& key, auto assign) { t.emplace(key, number(key, assign)); };

    add("carrier_frequency_hz", [](Scenario& s, double v) { s.geometry.carrier_frequency_hz = v; });
    add("carrier_frequency_ghz", [](Scenario& s, double v) { s.geometry.carrier_frequency_hz = v * 1e9; });
    add("bandwidth_hz", [](Scenario& s, double v) { s.power.bandwidth_hz = v; });
    add("bandwidth_ghz", [](Scenario& s, double v) { s.power.bandwidth_hz = v * 1e9; });
    add("waveguide_ris_height_m", [](Scenario& s, double v) { s.geometry.height_m = v; });
    add("distance_to_user_region_m", [](Scenario& s, double v) { s.geometry.region_offset_m = v; });
    add("user_region_side_length_m", [](Scenario& s, double v) { s.geometry.region_side_m = v; });

    add("transmit_power_w", [](Scenario& s, double v) { s.power.per_user_power_w = v; });
    add("transmit_power_dbm", [](Scenario& s, double v) { s.power.per_user_power_w = dbm_to_w(v); });
    add("noise_power_w", [](Scenario& s, double v) { s.power.noise_power_w = v; });
    add("noise_power_dbm", [](Scenario& s, double v) { s.power.noise_power_w = dbm_to_w(v); });
    add("equipment_power_consumption_dbm", [](Scenario& s, double v) {
      s.power.relay_static_w = dbm_to_w(v);
      s.power.ue_static_w = dbm_to_w(v);
    });
    add("relay_equipment_power_w", [](Scenario& s, double v) { s.power.relay_static_w = v; });
    add("relay_equipment_power_dbm", [](Scenario& s, double v) { s.power.relay_static_w = dbm_to_w(v); });
    add("user_equipment_power_w", [](Scenario& s, double v) { s.power.ue_static_w = v; });
    add("user_equipment_power_dbm", [](Scenario& s, double v) { s.power.ue_static_w = dbm_to_w(v); });
    add("amplifier_efficiency", [](Scenario& s, double v) { s.power.amplifier_efficiency = v; });
    add("phase_shifter_consumption_w", [](Scenario& s, double v) { s.power.phase_shifter_w = v; });
    add("phase_shifter_consumption_mw", [](Scenario& s, double v) { s.power.phase_shifter_w = v * 1e-3; });
    add("phase_shifter_consumption_dbm", [](Scenario& s, double v) { s.power.phase_shifter_w = dbm_to_w(v); });

    add("path_loss_parameter_a_db", [](Scenario& s, double v) { s.ris.pl_offset_db = v; });
    add("path_loss_parameter_b", [](Scenario& s, double v) { s.ris.pl_exponent = v; });
    add("shadow_fading_db", [](Scenario& s, double v) { s.ris.shadow_db = v; });
    add("ris_impairment_severity", [](Scenario& s, double v) { s.ris.phase_noise_severity = v; });
    add("rician_factor", [](Scenario& s, double v) { s.ris.rician_factor = v; });
    t.emplace("ris_elements", [](Scenario& s, std::string_view v) {
      const double m = parse_double(v, "ris_elements");
      if (!(m >= 1.0 && m <= 4294967295.0) || std::floor(m) != m) {
        throw ConfigError("ris_elements must be a positive integer, got '" + std::string(v) + "'");
      }
      s.ris.num_elements = static_cast<std::uint32_t>(m);
    });

    add("antenna_emission_fraction", [](Scenario& s, double v) { s.pinching.emission_fraction = v; });
    add("waveguide_loss_db_per_m", [](Scenario& s, double v) { s.pinching.waveguide_loss_db_per_m = v; });
    t.emplace("waveguide_feeder",
              [](Scenario& s, std::string_view v) { s.pinching.feeder = parse_feeder(trim(v)); });
    return t;
  }();
  return table;
}

}  // namespace

bool apply_setting(Scenario& scenario, std::string_view key, std::string_view value) {
  const auto& table = setters();
  auto it = table.find(key);
  if (it == table.end()) return false;
  it->second(scenario, value);
  return true;
}

const std::vector<std::string>& setting_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const auto& [name, _] : setters()) k.push_back(name);
    return k;
  }();
  return keys;
}

std::vector<KeyValue> parse_key_values(std::string_view text) {
  std::vector<KeyValue> out;
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    auto key = trim(line.substr(0, eq));
    auto value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    out.push_back({std::string(key), std::string(value), line_no});
  }
  return out;
}

Scenario parse_config(std::string_view text, const Scenario& base) {
  Scenario s = base;
  for (const auto& kv : parse_key_values(text)) {
    if (!apply_setting(s, kv.key, kv.value)) {
      throw ConfigError("line " + std::to_string(kv.line) + ": unknown key '" + kv.key + "'");
    }
  }
  return s;
}

std::string serialize(const Scenario& s) {
  std::ostringstream os;
  auto line = [&os](std::string_view key, const std::string& value) {
    os << key << " = " << value << '\n';
  };
  auto num = [&line](std::string_view key, double v) { line(key, format_roundtrip(v)); };

  num("carrier_frequency_hz", s.geometry.carrier_frequency_hz);
  num("bandwidth_hz", s.power.bandwidth_hz);
  num("waveguide_ris_height_m", s.geometry.height_m);
  num("distance_to_user_region_m", s.geometry.region_offset_m);
  num("user_region_side_length_m", s.geometry.region_side_m);
  num("transmit_power_w", s.power.per_user_power_w);
  num("noise_power_w", s.power.noise_power_w);
  num("relay_equipment_power_w", s.power.relay_static_w);
  num("user_equipment_power_w", s.power.ue_static_w);
  num("amplifier_efficiency", s.power.amplifier_efficiency);
  num("path_loss_parameter_a_db", s.ris.pl_offset_db);
  num("path_loss_parameter_b", s.ris.pl_exponent);
  num("shadow_fading_db", s.ris.shadow_db);
  num("ris_impairment_severity", s.ris.phase_noise_severity);
  num("rician_factor", s.ris.rician_factor);
  num("phase_shifter_consumption_w", s.power.phase_shifter_w);
  line("ris_elements", std::to_string(s.ris.num_elements));
  num("antenna_emission_fraction", s.pinching.emission_fraction);
  num("waveguide_loss_db_per_m", s.pinching.waveguide_loss_db_per_m);
  line("waveguide_feeder", std::string(to_string(s.pinching.feeder)));
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pinris
