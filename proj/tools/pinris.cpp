// SPDX-License-Identifier: Apache-2.0
//
// pinris: pinching-antenna vs RIS link comparison.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "pinris/cli/commands.hpp"

namespace {

using namespace pinris;

struct Common {
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trials;
  unsigned workers = 0;
  std::string out;
  std::string config;
  std::string kernel = "auto";
  std::string pa_positions;
  std::string ris_positions;
  std::string prelog;
  std::string grid;
  std::map<std::string, std::string> settings;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "base RNG seed");
  cmd->add_option("--trials", c.trials, "Monte-Carlo trials per grid point")->check(CLI::Range(2ull, ~0ull));
  cmd->add_option("--workers", c.workers, "worker threads (0 = all cores)");
  cmd->add_option("--out", c.out, "write output here instead of stdout");
  cmd->add_option("--config", c.config, "key = value scenario file")->check(CLI::ExistingFile);
  cmd->add_option("--kernel", c.kernel, "auto|scalar|avx2");
  cmd->add_option("--pa_positions", c.pa_positions, "uniform|symmetric|center");
  cmd->add_option("--ris_positions", c.ris_positions, "uniform|symmetric|center");
  cmd->add_option("--ris_prelog", c.prelog, "half|printed");
  cmd->add_option("--grid", c.grid, "override the sweep grid, e.g. logspace(2,5,31)");
  auto* group = cmd->add_option_group("scenario", "scenario parameters");
  for (const auto& key : setting_keys()) {
    group->add_option_function<std::string>(
        "--" + key, [&c, key](const std::string& v) { c.settings[key] = v; }, "");
  }
}

cli::CommandInputs to_inputs(const Common& c) {
  cli::CommandInputs in;
  if (!c.config.empty()) in.overrides = parse_key_values(read_text_file(c.config));
  for (const auto& key : setting_keys()) {
    const auto it = c.settings.find(key);
    if (it != c.settings.end()) in.overrides.push_back({key, it->second, 0});
  }
  in.seed = c.seed;
  in.trials = c.trials;
  in.workers = c.workers;
  in.kernel = c.kernel;
  if (!c.pa_positions.empty()) in.pa_placement = parse_placement(c.pa_positions);
  if (!c.ris_positions.empty()) in.ris_placement = parse_placement(c.ris_positions);
  if (!c.prelog.empty()) in.prelog = parse_prelog(c.prelog);
  if (!c.grid.empty()) in.grid = c.grid;
  return in;
}

int emit(const cli::CommandOutput& result, const std::string& out) {
  if (out.empty()) {
    std::cout << result.csv;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + out + "' for writing");
    f << result.csv;
    if (!f) throw std::runtime_error("write to '" + out + "' failed");
  }
  std::cerr << result.summary;
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pinching-antenna vs RIS link comparison"};
  app.set_version_flag("--version", PINRIS_VERSION);
  app.require_subcommand(1);

  Common c;
  auto* fig2 = app.add_subcommand("fig2", "SE vs number of RIS elements");
  auto* fig3 = app.add_subcommand("fig3", "SE vs distance to the user regions");
  auto* fig4 = app.add_subcommand("fig4", "energy efficiency vs transmit power (needs --ris_elements)");
  auto* sweep = app.add_subcommand("sweep", "run a sweep described by a spec file");
  auto* validate = app.add_subcommand("validate", "closed forms against simulation");
  std::string spec_file;
  double eta_scale = 1.0;
  sweep->add_option("specfile", spec_file, "sweep spec file")->required()->check(CLI::ExistingFile);
  validate->add_option("--mc_eta_scale", eta_scale, "scale the simulated free-space gain (fault injection)");
  for (auto* cmd : {fig2, fig3, fig4, sweep, validate}) add_common(cmd, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const auto in = to_inputs(c);
    if (fig2->parsed()) return emit(cli::cmd_fig2(in), c.out);
    if (fig3->parsed()) return emit(cli::cmd_fig3(in), c.out);
    if (fig4->parsed()) return emit(cli::cmd_fig4(in), c.out);
    if (sweep->parsed()) return emit(cli::cmd_sweep(read_text_file(spec_file), in), c.out);
    if (validate->parsed()) return emit(cli::cmd_validate(in, eta_scale), c.out);
  } catch (const cli::UsageError& e) {
    std::cerr << "pinris: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "pinris: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
