#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <set>
#include <string>
#include <unistd.h>

#include "pinris/cli/commands.hpp"
#include "pinris/report.hpp"

using namespace pinris;
using namespace pinris::cli;

namespace {

CommandInputs quick(std::uint64_t trials = 200) {
  CommandInputs in;
  in.trials = trials;
  in.workers = 1;
  return in;
}

int run(const std::string& args) {
  const std::string cmd = std::string(PINRIS_BINARY) + " " + args + " 2>/dev/null >/dev/null";
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("pinris_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("fig2 csv schema") {
  auto in = quick();
  in.grid = "100, 1000, 10000";
  const auto out = cmd_fig2(in);
  const auto doc = report::parse_csv(out.csv);
  CHECK(doc.meta("schema") == std::string(report::kSchema));
  CHECK(doc.meta("seed") == "1");
  CHECK(doc.meta("trials") == "200");
  CHECK(doc.meta("config.transmit_power_w").has_value());
  CHECK(doc.meta("crossover.ris_phase_noise.pa_end_feeder").has_value());
  REQUIRE(doc.rows.size() == 21);
  std::set<std::string> schemes;
  for (const auto& r : doc.rows) {
    schemes.insert(r.scheme);
    CHECK(r.experiment_id == "fig2");
    CHECK(r.metric_name == "se_bps_hz");
    CHECK(r.trials == 200u);
    CHECK(r.closed_form.has_value() == (r.scheme == "pa_ideal" || r.scheme == "ris_ideal"));
  }
  CHECK(schemes == std::set<std::string>{"pa_end_feeder", "pa_ideal", "pa_lossy_antenna", "pa_mid_feeder",
                                         "pa_passive", "ris_ideal", "ris_phase_noise"});
  CHECK(out.csv.find(std::string(report::kHeader)) != std::string::npos);
}

TEST_CASE("overrides reach the scenario") {
  CommandInputs in = quick();
  in.overrides.push_back({"transmit_power_dbm", "20", 0});
  in.overrides.push_back({"ris_elements", "123", 0});
  const Scenario s = resolve_scenario(in);
  CHECK(s.power.per_user_power_w == doctest::Approx(0.1));
  CHECK(s.ris.num_elements == 123u);
  in.overrides.push_back({"bogus", "1", 0});
  CHECK_THROWS_AS(resolve_scenario(in), ConfigError);
}

TEST_CASE("fig4 requires the RIS size") {
  CHECK_THROWS_AS(cmd_fig4(quick()), UsageError);
  auto in = quick();
  in.overrides.push_back({"ris_elements", "1000", 0});
  in.grid = "0, 8, 30";
  const auto doc = report::parse_csv(cmd_fig4(in).csv);
  CHECK(doc.rows.size() == 18);
  CHECK(doc.meta("peak.pa_ideal").has_value());
  CHECK(doc.meta("config.ris_elements") == "1000");
}

TEST_CASE("sweep spec files") {
  const std::string text =
      "experiment_id = my_sweep\n"
      "variable = transmit_power_dbm\n"
      "grid = 0, 10\n"
      "schemes = pa_ideal, ris_ideal\n"
      "metric = se\n"
      "trials = 300\n"
      "seed = 9\n"
      "ris_elements = 2000\n";
  const auto doc = report::parse_csv(cmd_sweep(text, CommandInputs{}).csv);
  CHECK(doc.rows.size() == 4);
  CHECK(doc.rows[0].experiment_id == "my_sweep");
  CHECK(doc.rows[0].seed == 9u);
  CHECK(doc.rows[0].trials == 300u);
  CHECK(doc.meta("config.ris_elements") == "2000");

  CHECK_THROWS(cmd_sweep("variable = ris_elements\nschemes = pa_ideal\n", CommandInputs{}));
  CHECK_THROWS(cmd_sweep("variable = ris_elements\ngrid = 10\nschemes = pa_lossy_antenna\n", CommandInputs{}));
  CHECK_NOTHROW(cmd_sweep(
      "variable = ris_elements\ngrid = 10\nschemes = pa_lossy_antenna\nantenna_emission_fraction = 0.5\ntrials = 10\n",
      CommandInputs{}));
  CHECK_THROWS(cmd_sweep("variable = ris_elements\ngrid = 10\nschemes = nope\n", CommandInputs{}));
}

TEST_CASE("validate passes on defaults and catches an injected fault") {
  auto in = quick(20000);
  in.workers = 0;
  const auto ok = cmd_validate(in);
  CHECK_MESSAGE(ok.exit_code == 0, ok.csv);
  const auto bad = cmd_validate(in, 2.0);
  CHECK(bad.exit_code != 0);
  CHECK(bad.csv.find("FAIL pinching_closed_form_vs_mc") != std::string::npos);
}

TEST_CASE("binary: identical output across runs and worker counts") {
  const auto a = tmp("a.csv");
  const auto b = tmp("b.csv");
  const std::string common = "fig3 --trials 64 --grid 5,25,45 --ris_elements 2000 --out ";
  REQUIRE(run(common + a.string() + " --workers 1") == 0);
  REQUIRE(run(common + b.string() + " --workers 3") == 0);
  CHECK(read_text_file(a.string()) == read_text_file(b.string()));
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("binary: exit codes") {
  CHECK(run("--version") == 0);
  CHECK(run("fig4 --trials 10") != 0);
  CHECK(run("fig2 --trials 1") != 0);
  CHECK(run("fig2 --amplifier_efficiency 3 --trials 10") != 0);
  CHECK(run("nonsense") != 0);
  CHECK(run("sweep /nonexistent/file") != 0);
  const auto cfg = tmp("cfg.txt");
  {
    std::FILE* f = std::fopen(cfg.string().c_str(), "w");
    std::fputs("transmit_power_dbm = 10\n", f);
    std::fclose(f);
  }
  const auto out = tmp("o.csv");
  CHECK(run("fig4 --ris_elements 100 --trials 10 --grid 0,1 --config " + cfg.string() + " --out " + out.string()) ==
        0);
  CHECK(run("validate --trials 2000 --mc_eta_scale 2") != 0);
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
}
