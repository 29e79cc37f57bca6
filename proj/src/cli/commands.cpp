// SPDX-License-Identifier: Apache-2.0

#include "pinris/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pinris/cli/validation.hpp"
#include "pinris/report.hpp"

namespace pinris::cli {

namespace ex = experiments;

namespace {

std::string fmt9(double v) { return report::format_sig9(v); }

void apply_run_options(const CommandInputs& in, ex::SweepSpec& spec) {
  if (in.seed) spec.mc.seed = *in.seed;
  if (in.trials) spec.mc.trials = *in.trials;
  spec.mc.workers = in.workers;
  if (in.pa_placement) spec.pa_placement = *in.pa_placement;
  if (in.ris_placement) spec.ris_placement = *in.ris_placement;
  if (in.prelog) spec.prelog = *in.prelog;
  if (in.grid) spec.grid = ex::parse_grid(*in.grid);
}

CommandOutput finish(const ex::SweepSpec& spec, const Scenario& scenario, const ex::SweepResult& result,
                     const kernels::KernelTable& kernels, std::vector<std::string> trailer, std::string summary) {
  CommandOutput out;
  report::RunMetadata meta;
  meta.kernel = std::string(kernels.name);
  out.csv = report::to_csv(result, spec, scenario, meta, trailer);
  out.summary = std::move(summary);
  return out;
}

std::string crossover_text(const std::optional<double>& x) { return x ? fmt9(*x) : "none"; }

}  // namespace

Scenario resolve_scenario(const CommandInputs& inputs, void (*preset)(Scenario&)) {
  Scenario s = default_table1();
  if (preset) preset(s);
  for (const auto& kv : inputs.overrides) {
    if (!apply_setting(s, kv.key, kv.value)) throw ConfigError("unknown setting '" + kv.key + "'");
  }
  validate(s);
  return s;
}

bool overrides_key(const CommandInputs& inputs, std::string_view key) {
  return std::any_of(inputs.overrides.begin(), inputs.overrides.end(),
                     [key](const KeyValue& kv) { return kv.key == key; });
}

CommandOutput cmd_fig2(const CommandInputs& inputs) {
  const Scenario scenario = resolve_scenario(inputs, ex::fig2_preset);
  auto spec = ex::fig2_spec();
  apply_run_options(inputs, spec);
  const auto& kernels = kernels::kernels_by_name(inputs.kernel);
  const auto result = ex::run_sweep(spec, scenario, kernels);

  std::vector<std::string> trailer;
  std::ostringstream summary;
  for (ex::Scheme ris : {ex::Scheme::RisIdeal, ex::Scheme::RisPhaseNoise}) {
    if (!result.has(ris)) continue;
    for (ex::Scheme pa : {ex::Scheme::PaIdeal, ex::Scheme::PaLossyAntenna, ex::Scheme::PaMidFeeder,
                          ex::Scheme::PaEndFeeder}) {
      if (!result.has(pa)) continue;
      const std::string line = "crossover." + std::string(ex::to_string(ris)) + "." +
                               std::string(ex::to_string(pa)) + " = " +
                               crossover_text(ex::crossover(result, ris, pa));
      trailer.push_back(line);
      summary << line << '\n';
    }
  }
  return finish(spec, scenario, result, kernels, trailer, summary.str());
}

CommandOutput cmd_fig3(const CommandInputs& inputs) {
  const Scenario scenario = resolve_scenario(inputs, ex::fig3_preset);
  auto spec = ex::fig3_spec();
  apply_run_options(inputs, spec);
  const auto& kernels = kernels::kernels_by_name(inputs.kernel);
  const auto result = ex::run_sweep(spec, scenario, kernels);

  std::vector<std::string> trailer;
  std::ostringstream summary;
  if (result.has(ex::Scheme::PaIdeal) && result.has(ex::Scheme::RisIdeal)) {
    const auto x = result.grid();
    const auto pa = result.series(ex::Scheme::PaIdeal);
    const auto ris = result.series(ex::Scheme::RisIdeal);
    bool monotone = true;
    std::string gaps;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double gap = pa[i] - ris[i];
      if (i > 0 && gap < pa[i - 1] - ris[i - 1]) monotone = false;
      gaps += (i ? ";" : "") + fmt9(x[i]) + ":" + fmt9(gap);
    }
    trailer.push_back("gap.pa_ideal.ris_ideal = " + gaps);
    trailer.push_back("gap.monotone = " + std::string(monotone ? "true" : "false"));
    for (const auto& t : trailer) summary << t << '\n';
  }
  return finish(spec, scenario, result, kernels, trailer, summary.str());
}

CommandOutput cmd_fig4(const CommandInputs& inputs) {
  if (!overrides_key(inputs, "ris_elements")) {
    throw UsageError("fig4 needs the RIS size: pass --ris_elements <M> (or set ris_elements in --config)");
  }
  const Scenario scenario = resolve_scenario(inputs, ex::fig4_preset);
  auto spec = ex::fig4_spec();
  apply_run_options(inputs, spec);
  const auto& kernels = kernels::kernels_by_name(inputs.kernel);
  const auto result = ex::run_sweep(spec, scenario, kernels);

  std::vector<std::string> trailer;
  std::ostringstream summary;
  for (ex::Scheme s : spec.schemes) {
    const auto p = ex::peak(result, s);
    const std::string line = "peak." + std::string(ex::to_string(s)) + " = " + fmt9(p.x) + "," + fmt9(p.value);
    trailer.push_back(line);
    summary << line << '\n';
  }
  std::sort(trailer.begin(), trailer.end());
  return finish(spec, scenario, result, kernels, trailer, summary.str());
}

CommandOutput cmd_sweep(std::string_view spec_text, const CommandInputs& inputs) {
  ex::SweepSpec spec;
  CommandInputs merged;
  bool have_grid = false;
  bool have_schemes = false;
  bool have_variable = false;
  for (const auto& kv : parse_key_values(spec_text)) {
    const auto& k = kv.key;
    const auto& v = kv.value;
    if (k == "experiment_id") {
      spec.experiment_id = v;
    } else if (k == "variable") {
      spec.variable = ex::parse_variable(v);
      have_variable = true;
    } else if (k == "grid") {
      spec.grid = ex::parse_grid(v);
      have_grid = true;
    } else if (k == "schemes") {
      spec.schemes.clear();
      std::istringstream is(v);
      for (std::string name; std::getline(is, name, ',');) {
        const auto first = name.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        name = name.substr(first, name.find_last_not_of(" \t") - first + 1);
        spec.schemes.push_back(ex::parse_scheme(name));
      }
      have_schemes = true;
    } else if (k == "metric") {
      spec.metric = ex::parse_metric(v);
    } else if (k == "trials") {
      spec.mc.trials = static_cast<std::uint64_t>(parse_double(v, "trials"));
    } else if (k == "seed") {
      spec.mc.seed = static_cast<std::uint64_t>(parse_double(v, "seed"));
    } else if (k == "pa_placement") {
      spec.pa_placement = parse_placement(v);
    } else if (k == "ris_placement") {
      spec.ris_placement = parse_placement(v);
    } else if (k == "ris_prelog") {
      spec.prelog = parse_prelog(v);
    } else {
      merged.overrides.push_back(kv);
    }
  }
  if (!have_variable) throw UsageError("sweep file: missing 'variable'");
  if (!have_grid && !inputs.grid) throw UsageError("sweep file: missing 'grid'");
  if (!have_schemes) throw UsageError("sweep file: missing 'schemes'");

  merged.overrides.insert(merged.overrides.end(), inputs.overrides.begin(), inputs.overrides.end());
  if (std::find(spec.schemes.begin(), spec.schemes.end(), ex::Scheme::PaLossyAntenna) != spec.schemes.end() &&
      !overrides_key(merged, "antenna_emission_fraction")) {
    throw UsageError("scheme pa_lossy_antenna needs antenna_emission_fraction to be set");
  }
  const Scenario scenario = resolve_scenario(merged);
  apply_run_options(inputs, spec);
  const auto& kernels = kernels::kernels_by_name(inputs.kernel);
  const auto result = ex::run_sweep(spec, scenario, kernels);
  return finish(spec, scenario, result, kernels, {}, {});
}

CommandOutput cmd_validate(const CommandInputs& inputs, double mc_eta_scale) {
  const Scenario scenario = resolve_scenario(inputs);
  ValidationOptions options;
  if (inputs.seed) options.mc.seed = *inputs.seed;
  if (inputs.trials) options.mc.trials = *inputs.trials;
  options.mc.workers = inputs.workers;
  options.mc_eta_scale = mc_eta_scale;
  const auto checks = run_validation(scenario, options, kernels::kernels_by_name(inputs.kernel));

  CommandOutput out;
  std::size_t failed = 0;
  std::ostringstream os;
  for (const auto& c : checks) {
    os << format_check(c) << '\n';
    if (!c.pass) ++failed;
  }
  os << (failed == 0 ? "all " + std::to_string(checks.size()) + " checks passed"
                     : std::to_string(failed) + " of " + std::to_string(checks.size()) + " checks FAILED")
     << '\n';
  out.csv = os.str();
  out.exit_code = failed == 0 ? 0 : 1;
  return out;
}

}  // namespace pinris::cli
