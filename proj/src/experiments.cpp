// SPDX-License-Identifier: Apache-2.0

#include "pinris/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pinris/channel.hpp"
#include "pinris/energy.hpp"
#include "pinris/pinching.hpp"

namespace pinris::experiments {

namespace {

constexpr Scheme kAllSchemes[] = {Scheme::PaEndFeeder, Scheme::PaIdeal,  Scheme::PaLossyAntenna,
                                  Scheme::PaMidFeeder, Scheme::PaPassive, Scheme::RisIdeal,
                                  Scheme::RisPhaseNoise};

constexpr double kGiga = 1e9;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    const auto pos = s.find(sep);
    parts.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s = s.substr(pos + 1);
  }
  return parts;
}

}  // namespace

std::string_view to_string(SweepVariable variable) {
  switch (variable) {
    case SweepVariable::RisElements: return "ris_elements";
    case SweepVariable::RegionOffset: return "distance_to_user_region_m";
    case SweepVariable::TransmitPowerDbm: return "transmit_power_dbm";
  }
  return "ris_elements";
}

std::string_view to_string(Metric metric) {
  return metric == Metric::SpectralEfficiency ? "se_bps_hz" : "ee_gbit_per_joule";
}

std::string_view to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::PaEndFeeder: return "pa_end_feeder";
    case Scheme::PaIdeal: return "pa_ideal";
    case Scheme::PaLossyAntenna: return "pa_lossy_antenna";
    case Scheme::PaMidFeeder: return "pa_mid_feeder";
    case Scheme::PaPassive: return "pa_passive";
    case Scheme::RisIdeal: return "ris_ideal";
    case Scheme::RisPhaseNoise: return "ris_phase_noise";
  }
  return "pa_ideal";
}

SweepVariable parse_variable(std::string_view text) {
  if (text == "ris_elements") return SweepVariable::RisElements;
  if (text == "distance_to_user_region_m" || text == "region_offset") return SweepVariable::RegionOffset;
  if (text == "transmit_power_dbm") return SweepVariable::TransmitPowerDbm;
  throw SweepError("unknown sweep variable '" + std::string(text) +
                   "' (ris_elements|distance_to_user_region_m|transmit_power_dbm)");
}

Metric parse_metric(std::string_view text) {
  if (text == "se" || text == "se_bps_hz") return Metric::SpectralEfficiency;
  if (text == "ee" || text == "ee_gbit_per_joule") return Metric::EnergyEfficiency;
  throw SweepError("unknown metric '" + std::string(text) + "' (se|ee)");
}

Scheme parse_scheme(std::string_view text) {
  for (Scheme s : kAllSchemes) {
    if (to_string(s) == text) return s;
  }
  throw SweepError("unknown scheme '" + std::string(text) + "'");
}

bool is_ris(Scheme scheme) { return scheme == Scheme::RisIdeal || scheme == Scheme::RisPhaseNoise; }

std::vector<double> SweepResult::grid() const {
  std::vector<double> x;
  for (const auto& row : rows) {
    if (x.empty() || x.back() != row.x) x.push_back(row.x);
  }
  return x;
}

bool SweepResult::has(Scheme scheme) const {
  return std::any_of(rows.begin(), rows.end(), [scheme](const SweepRow& r) { return r.scheme == scheme; });
}

std::vector<double> SweepResult::series(Scheme scheme) const {
  std::vector<double> v;
  for (const auto& row : rows) {
    if (row.scheme == scheme) v.push_back(row.mc.mean);
  }
  return v;
}

std::vector<double> SweepResult::ci_series(Scheme scheme) const {
  std::vector<double> v;
  for (const auto& row : rows) {
    if (row.scheme == scheme) v.push_back(row.mc.ci_half_width_95);
  }
  return v;
}

std::vector<std::optional<double>> SweepResult::closed_form_series(Scheme scheme) const {
  std::vector<std::optional<double>> v;
  for (const auto& row : rows) {
    if (row.scheme == scheme) v.push_back(row.closed_form);
  }
  return v;
}

void check_spec(const SweepSpec& spec) {
  if (spec.grid.empty()) throw SweepError("sweep grid is empty");
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    const double x = spec.grid[i];
    if (!std::isfinite(x)) throw SweepError("sweep grid contains a non-finite value");
    if (i > 0 && !(x > spec.grid[i - 1])) throw SweepError("sweep grid must be strictly increasing");
    if (spec.variable == SweepVariable::RisElements &&
        (x < 1.0 || x > 4294967295.0 || std::floor(x) != x)) {
      throw SweepError("ris_elements grid values must be positive integers");
    }
    if (spec.variable == SweepVariable::RegionOffset && x < 0.0) {
      throw SweepError("distance_to_user_region_m grid values must be >= 0");
    }
  }
  if (spec.schemes.empty()) throw SweepError("sweep has no schemes");
  for (std::size_t i = 0; i < spec.schemes.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.schemes.size(); ++j) {
      if (spec.schemes[i] == spec.schemes[j]) {
        throw SweepError("scheme '" + std::string(to_string(spec.schemes[i])) + "' listed twice");
      }
    }
    if (spec.metric == Metric::EnergyEfficiency && spec.schemes[i] == Scheme::PaPassive) {
      throw SweepError("scheme pa_passive has no power consumption model; use metric se");
    }
  }
  if (spec.mc.trials < 2) throw SweepError("trials must be >= 2");
}

Scenario scenario_for(Scheme scheme, const Scenario& base) {
  Scenario s = base;
  switch (scheme) {
    case Scheme::PaIdeal:
      s.pinching.emission_fraction = 1.0;
      s.pinching.feeder = Feeder::Ideal;
      break;
    case Scheme::PaLossyAntenna:
      s.pinching.feeder = Feeder::Ideal;
      break;
    case Scheme::PaMidFeeder:
      s.pinching.emission_fraction = 1.0;
      s.pinching.feeder = Feeder::MidFeeder;
      break;
    case Scheme::PaEndFeeder:
      s.pinching.emission_fraction = 1.0;
      s.pinching.feeder = Feeder::EndFeeder;
      break;
    case Scheme::PaPassive:
      s.pinching.emission_fraction = 1.0;
      break;
    case Scheme::RisIdeal:
      s.ris.phase_noise_severity = 0.0;
      break;
    case Scheme::RisPhaseNoise:
      break;
  }
  return s;
}

Scenario at_grid_point(const Scenario& base, SweepVariable variable, double x) {
  Scenario s = base;
  switch (variable) {
    case SweepVariable::RisElements: s.ris.num_elements = static_cast<std::uint32_t>(x); break;
    case SweepVariable::RegionOffset: s.geometry.region_offset_m = x; break;
    case SweepVariable::TransmitPowerDbm: s.power.per_user_power_w = dbm_to_w(x); break;
  }
  return s;
}

SweepResult run_sweep(const SweepSpec& spec, const Scenario& base, const kernels::KernelTable& kernels) {
  check_spec(spec);
  validate(base);

  std::vector<Scheme> schemes = spec.schemes;
  std::sort(schemes.begin(), schemes.end(),
            [](Scheme a, Scheme b) { return to_string(a) < to_string(b); });
  const std::size_t n_grid = spec.grid.size();
  const std::size_t n_schemes = schemes.size();

  // Per (grid point, scheme) scenarios, validated up front.
  std::vector<Scenario> cells;
  cells.reserve(n_grid * n_schemes);
  for (double x : spec.grid) {
    const Scenario point = at_grid_point(base, spec.variable, x);
    for (Scheme scheme : schemes) cells.push_back(validate(scenario_for(scheme, point)));
  }

  const bool need_ris = std::any_of(schemes.begin(), schemes.end(), is_ris);
  const bool need_impaired = std::find(schemes.begin(), schemes.end(), Scheme::RisPhaseNoise) != schemes.end();
  const bool per_point_elements = spec.variable == SweepVariable::RisElements;
  std::vector<std::uint32_t> checkpoints;
  if (per_point_elements) {
    for (double x : spec.grid) checkpoints.push_back(static_cast<std::uint32_t>(x));
  } else {
    checkpoints.push_back(base.ris.num_elements);
  }
  const double epsilon = need_impaired ? base.ris.phase_noise_severity : 0.0;
  const double eta = free_space_gain(base.geometry.carrier_frequency_hz);
  const bool energy = spec.metric == Metric::EnergyEfficiency;

  auto sampler = [&](const mc::TrialContext& ctx, std::span<double> out) {
    double u[4];
    auto geometry_stream = ctx.stream(rng::Stream::Geometry);
    for (double& v : u) v = geometry_stream.uniform();

    std::vector<RisGainSample> gains(checkpoints.size());
    if (need_ris) sample_ris_gains(ctx, base.ris.rician_factor, epsilon, checkpoints, gains, kernels);

    for (std::size_t g = 0; g < n_grid; ++g) {
      for (std::size_t k = 0; k < n_schemes; ++k) {
        const Scenario& s = cells[g * n_schemes + k];
        const Scheme scheme = schemes[k];
        double value = 0.0;
        if (is_ris(scheme)) {
          const auto users = place_users(s.geometry, spec.ris_placement, u);
          const auto& sample = gains[per_point_elements ? g : 0];
          const double gain = scheme == Scheme::RisIdeal ? sample.coherent : sample.impaired;
          const double rate =
              two_slot_rate(ris_snr(s.power.per_user_power_w, gain, s.power.noise_power_w, s.geometry, s.ris, users));
          value = energy ? ee_ris(2.0 * rate, s.power, s.ris.num_elements).ee_bits_per_joule / kGiga : rate;
        } else if (scheme == Scheme::PaPassive) {
          const auto users = place_users(s.geometry, spec.pa_placement, u);
          value = two_slot_rate(passive_pinching_snr(s, users, eta));
        } else {
          const auto users = place_users(s.geometry, spec.pa_placement, u);
          const auto rates = pinching_trial_rates(s, users, eta);
          value = energy ? ee_pinching(rates.sum(), s.power).ee_bits_per_joule / kGiga : rates.user2;
        }
        out[g * n_schemes + k] = value;
      }
    }
  };

  const auto estimates = mc::estimate_many(n_grid * n_schemes, sampler, spec.mc);

  SweepResult result;
  result.experiment_id = spec.experiment_id;
  result.variable = spec.variable;
  result.metric = spec.metric;
  result.rows.reserve(estimates.size());
  for (std::size_t g = 0; g < n_grid; ++g) {
    for (std::size_t k = 0; k < n_schemes; ++k) {
      const Scenario& s = cells[g * n_schemes + k];
      SweepRow row;
      row.x = spec.grid[g];
      row.scheme = schemes[k];
      row.metric = spec.metric;
      row.mc = estimates[g * n_schemes + k];
      if (schemes[k] == Scheme::PaIdeal) {
        const double rate = pinching_rate_closed_form(s);
        row.closed_form = energy ? ee_pinching(2.0 * rate, s.power).ee_bits_per_joule / kGiga : rate;
      } else if (schemes[k] == Scheme::RisIdeal) {
        const double rate = ris_rate_closed_form(s, spec.prelog);
        row.closed_form = energy ? ee_ris(2.0 * rate, s.power, s.ris.num_elements).ee_bits_per_joule / kGiga : rate;
      }
      result.rows.push_back(row);
    }
  }
  return result;
}

std::optional<double> crossover(std::span<const double> x, std::span<const double> a, std::span<const double> b) {
  if (x.size() != a.size() || x.size() != b.size()) {
    throw SweepError("crossover: series lengths differ");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double diff = a[i] - b[i];
    if (diff >= 0.0) {
      if (i == 0) return x[0];
      const double prev = a[i - 1] - b[i - 1];
      return x[i - 1] + (x[i] - x[i - 1]) * (-prev) / (diff - prev);
    }
  }
  return std::nullopt;
}

std::optional<double> crossover(const SweepResult& table, Scheme a, Scheme b) {
  if (!table.has(a) || !table.has(b)) throw SweepError("crossover: scheme missing from table");
  const auto x = table.grid();
  const auto ya = table.series(a);
  const auto yb = table.series(b);
  if (ya.size() != x.size() || yb.size() != x.size()) throw SweepError("crossover: mismatched grids");
  return crossover(x, ya, yb);
}

Peak peak(const SweepResult& table, Scheme scheme) {
  const auto x = table.grid();
  const auto y = table.series(scheme);
  if (y.empty() || y.size() != x.size()) throw SweepError("peak: scheme missing from table");
  const auto it = std::max_element(y.begin(), y.end());
  const auto i = static_cast<std::size_t>(it - y.begin());
  return {x[i], y[i]};
}

std::vector<double> linspace(double first, double last, std::size_t count) {
  if (count == 0) throw SweepError("linspace: count must be >= 1");
  if (count == 1) return {first};
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    v[i] = first + (last - first) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  v.back() = last;
  return v;
}

std::vector<double> logspace(double first_exp, double last_exp, std::size_t count) {
  auto v = linspace(first_exp, last_exp, count);
  for (double& e : v) e = std::pow(10.0, e);
  return v;
}

std::vector<double> parse_grid(std::string_view text) {
  text = trim(text);
  auto call_args = [&](std::string_view name) -> std::optional<std::vector<double>> {
    if (text.substr(0, name.size()) != name) return std::nullopt;
    auto rest = trim(text.substr(name.size()));
    if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') {
      throw SweepError("grid: malformed " + std::string(name) + "(...)");
    }
    std::vector<double> args;
    for (auto part : split(rest.substr(1, rest.size() - 2), ',')) args.push_back(parse_double(part, "grid"));
    return args;
  };

  if (auto args = call_args("linspace")) {
    if (args->size() != 3) throw SweepError("grid: linspace(first, last, count)");
    return linspace((*args)[0], (*args)[1], static_cast<std::size_t>((*args)[2]));
  }
  if (auto args = call_args("logspace")) {
    if (args->size() != 3) throw SweepError("grid: logspace(first_exp, last_exp, count)");
    return logspace((*args)[0], (*args)[1], static_cast<std::size_t>((*args)[2]));
  }
  if (auto args = call_args("range")) {
    if (args->size() != 3 || !((*args)[2] > 0.0)) throw SweepError("grid: range(start, stop, step>0)");
    const double start = (*args)[0];
    const double stop = (*args)[1];
    const double step = (*args)[2];
    std::vector<double> v;
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < n; ++i) v.push_back(start + step * static_cast<double>(i));
    return v;
  }
  std::vector<double> v;
  for (auto part : split(text, ',')) v.push_back(parse_double(part, "grid"));
  return v;
}

namespace {

std::vector<double> rounded(std::vector<double> v) {
  for (double& x : v) x = std::round(x);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

SweepSpec fig2_spec() {
  SweepSpec spec;
  spec.experiment_id = "fig2";
  spec.variable = SweepVariable::RisElements;
  spec.grid = rounded(logspace(2.0, 5.0, 31));
  spec.schemes = {Scheme::RisIdeal,    Scheme::RisPhaseNoise, Scheme::PaIdeal,  Scheme::PaLossyAntenna,
                  Scheme::PaMidFeeder, Scheme::PaEndFeeder,   Scheme::PaPassive};
  spec.metric = Metric::SpectralEfficiency;
  return spec;
}

void fig2_preset(Scenario& scenario) {
  scenario.power.per_user_power_w = dbm_to_w(15.0);
  scenario.pinching.emission_fraction = kFig2LossyAntennaFraction;
}

SweepSpec fig3_spec() {
  SweepSpec spec;
  spec.experiment_id = "fig3";
  spec.variable = SweepVariable::RegionOffset;
  spec.grid = parse_grid("range(5, 50, 5)");
  spec.schemes = {Scheme::PaIdeal, Scheme::PaMidFeeder, Scheme::PaEndFeeder, Scheme::RisIdeal,
                  Scheme::RisPhaseNoise};
  spec.metric = Metric::SpectralEfficiency;
  return spec;
}

void fig3_preset(Scenario& scenario) {
  scenario.power.per_user_power_w = dbm_to_w(15.0);
  scenario.ris.num_elements = kFig3RisElements;
}

SweepSpec fig4_spec() {
  SweepSpec spec;
  spec.experiment_id = "fig4";
  spec.variable = SweepVariable::TransmitPowerDbm;
  spec.grid = parse_grid("range(-10, 50, 1)");
  spec.schemes = {Scheme::PaIdeal,     Scheme::PaLossyAntenna, Scheme::PaMidFeeder,
                  Scheme::PaEndFeeder, Scheme::RisIdeal,       Scheme::RisPhaseNoise};
  spec.metric = Metric::EnergyEfficiency;
  return spec;
}

void fig4_preset(Scenario& scenario) { scenario.pinching.emission_fraction = kFig2LossyAntennaFraction; }

}  // namespace pinris::experiments
