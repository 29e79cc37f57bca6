#include <doctest.h>

#include <cmath>

#include "pinris/experiments.hpp"

using namespace pinris;
using namespace pinris::experiments;

namespace {

SweepSpec small_spec() {
  SweepSpec spec;
  spec.variable = SweepVariable::RisElements;
  spec.grid = {100, 1000, 5000};
  spec.schemes = {Scheme::RisIdeal, Scheme::PaIdeal, Scheme::PaEndFeeder, Scheme::RisPhaseNoise};
  spec.mc = {500, 1, 1};
  return spec;
}

}  // namespace

TEST_CASE("crossover on a synthetic fixture") {
  std::vector<double> x, a, b;
  for (int i = 0; i <= 10; ++i) {
    x.push_back(10.0 * i);
    a.push_back(10.0 * i);
    b.push_back(42.0);
  }
  const auto c = crossover(x, a, b);
  REQUIRE(c.has_value());
  CHECK(*c == doctest::Approx(42.0));
  std::vector<double> high(11, 1000.0);
  CHECK_FALSE(crossover(x, a, high).has_value());
  CHECK(*crossover(x, high, b) == 0.0);
  CHECK_THROWS(crossover(std::vector<double>{1.0}, a, b));
}

TEST_CASE("grid parsing") {
  CHECK(parse_grid("1, 2.5, 4") == std::vector<double>{1.0, 2.5, 4.0});
  CHECK(parse_grid("range(5, 50, 5)").size() == 10);
  CHECK(parse_grid("range(-10, 50, 1)").size() == 61);
  const auto lg = parse_grid("logspace(2, 5, 4)");
  REQUIRE(lg.size() == 4);
  CHECK(lg[0] == doctest::Approx(100.0));
  CHECK(lg[3] == doctest::Approx(1e5));
  CHECK(parse_grid("linspace(0, 1, 3)") == std::vector<double>{0.0, 0.5, 1.0});
  CHECK_THROWS(parse_grid("range(1, 2, 0)"));
  CHECK_THROWS(parse_grid("linspace(0, 1)"));
  CHECK_THROWS(parse_grid("1, x"));
}

TEST_CASE("presets") {
  const auto f2 = fig2_spec();
  CHECK(f2.schemes.size() == 7);
  CHECK(f2.grid.front() == 100.0);
  CHECK(f2.grid.back() == 100000.0);
  CHECK(fig3_spec().grid.front() == 5.0);
  CHECK(fig4_spec().metric == Metric::EnergyEfficiency);
  Scenario s = default_table1();
  fig3_preset(s);
  CHECK(s.ris.num_elements == kFig3RisElements);
}

TEST_CASE("rows are ordered by grid value then scheme name") {
  const auto result = run_sweep(small_spec(), default_table1());
  REQUIRE(result.rows.size() == 12);
  CHECK(result.rows[0].scheme == Scheme::PaEndFeeder);
  CHECK(result.rows[1].scheme == Scheme::PaIdeal);
  CHECK(result.rows[2].scheme == Scheme::RisIdeal);
  CHECK(result.rows[3].scheme == Scheme::RisPhaseNoise);
  CHECK(result.grid() == std::vector<double>{100, 1000, 5000});
  for (const auto& row : result.rows) {
    CHECK(row.closed_form.has_value() == (row.scheme == Scheme::PaIdeal || row.scheme == Scheme::RisIdeal));
    CHECK(row.mc.trials == 500u);
  }
}

TEST_CASE("sweeps are deterministic and PA curves ignore the RIS size") {
  const auto a = run_sweep(small_spec(), default_table1());
  auto spec = small_spec();
  spec.mc.workers = 3;
  const auto b = run_sweep(spec, default_table1());
  for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].mc.mean == b.rows[i].mc.mean);
  const auto pa = a.series(Scheme::PaIdeal);
  CHECK(pa[0] == pa[1]);
  CHECK(pa[1] == pa[2]);
  const auto ris = a.series(Scheme::RisIdeal);
  CHECK(ris[0] < ris[1]);
  CHECK(ris[1] < ris[2]);
  const auto noisy = a.series(Scheme::RisPhaseNoise);
  for (std::size_t i = 0; i < ris.size(); ++i) CHECK(noisy[i] < ris[i]);
}

TEST_CASE("closed-form columns do not depend on the seed") {
  auto spec = small_spec();
  const auto a = run_sweep(spec, default_table1());
  spec.mc.seed = 77;
  const auto b = run_sweep(spec, default_table1());
  CHECK(a.closed_form_series(Scheme::PaIdeal) == b.closed_form_series(Scheme::PaIdeal));
  CHECK(a.closed_form_series(Scheme::RisIdeal) == b.closed_form_series(Scheme::RisIdeal));
  CHECK(a.series(Scheme::PaIdeal) != b.series(Scheme::PaIdeal));
}

TEST_CASE("single grid point") {
  auto spec = small_spec();
  spec.grid = {2000};
  const auto r = run_sweep(spec, default_table1());
  CHECK(r.rows.size() == spec.schemes.size());
}

TEST_CASE("other sweep variables") {
  SweepSpec spec;
  spec.variable = SweepVariable::TransmitPowerDbm;
  spec.grid = {0, 10, 20};
  spec.schemes = {Scheme::PaIdeal, Scheme::PaPassive};
  spec.mc = {500, 1, 1};
  const auto r = run_sweep(spec, default_table1());
  const auto pa = r.series(Scheme::PaIdeal);
  const auto cf = r.closed_form_series(Scheme::PaIdeal);
  CHECK(pa[0] < pa[1]);
  CHECK(pa[1] < pa[2]);
  CHECK(*cf[2] > *cf[0]);

  spec.variable = SweepVariable::RegionOffset;
  spec.grid = {0, 10, 40};
  const auto d = run_sweep(spec, default_table1());
  const auto pd = d.series(Scheme::PaIdeal);
  CHECK(pd[0] == pd[2]);  // pinching link length does not depend on d
}

TEST_CASE("energy-efficiency sweep and peaks") {
  SweepSpec spec;
  spec.variable = SweepVariable::TransmitPowerDbm;
  spec.grid = {-10, 0, 8, 20, 40};
  spec.schemes = {Scheme::PaIdeal, Scheme::RisIdeal};
  spec.metric = Metric::EnergyEfficiency;
  spec.mc = {500, 1, 1};
  const auto r = run_sweep(spec, default_table1());
  const auto p = peak(r, Scheme::PaIdeal);
  CHECK(p.x == 8.0);
  CHECK(p.value > 30.0);
  for (const auto& row : r.rows) CHECK(row.metric == Metric::EnergyEfficiency);
}

TEST_CASE("spec errors") {
  auto spec = small_spec();
  spec.grid = {};
  CHECK_THROWS_AS(check_spec(spec), SweepError);
  spec = small_spec();
  spec.grid = {100, 50};
  CHECK_THROWS_AS(check_spec(spec), SweepError);
  spec = small_spec();
  spec.grid = {100.5};
  CHECK_THROWS_AS(check_spec(spec), SweepError);
  spec = small_spec();
  spec.schemes.push_back(Scheme::PaIdeal);
  CHECK_THROWS_AS(check_spec(spec), SweepError);
  spec = small_spec();
  spec.mc.trials = 1;
  CHECK_THROWS_AS(check_spec(spec), SweepError);
  spec = small_spec();
  spec.metric = Metric::EnergyEfficiency;
  spec.schemes = {Scheme::PaPassive};
  CHECK_THROWS_AS(check_spec(spec), SweepError);
  spec = small_spec();
  spec.variable = SweepVariable::RegionOffset;
  spec.grid = {-1.0, 2.0};
  CHECK_THROWS_AS(check_spec(spec), SweepError);
  CHECK_THROWS_AS(parse_scheme("pa_magic"), SweepError);
  CHECK_THROWS_AS(parse_variable("height"), SweepError);
}

TEST_CASE("scheme hardware") {
  Scenario base = default_table1();
  base.pinching.emission_fraction = 0.55;
  CHECK(scenario_for(Scheme::PaIdeal, base).pinching.emission_fraction == 1.0);
  CHECK(scenario_for(Scheme::PaLossyAntenna, base).pinching.emission_fraction == 0.55);
  CHECK(scenario_for(Scheme::PaLossyAntenna, base).pinching.feeder == Feeder::Ideal);
  CHECK(scenario_for(Scheme::PaEndFeeder, base).pinching.feeder == Feeder::EndFeeder);
  CHECK(scenario_for(Scheme::RisIdeal, base).ris.phase_noise_severity == 0.0);
  CHECK(scenario_for(Scheme::RisPhaseNoise, base).ris.phase_noise_severity == 0.5);
}
