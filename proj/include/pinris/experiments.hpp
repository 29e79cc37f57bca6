// SPDX-License-Identifier: Apache-2.0
//
// Parameter sweeps that bind the link models into comparison tables.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pinris/config.hpp"
#include "pinris/kernels/kernels.hpp"
#include "pinris/mc.hpp"
#include "pinris/placement.hpp"
#include "pinris/ris.hpp"

namespace pinris::experiments {

enum class SweepVariable { RisElements, RegionOffset, TransmitPowerDbm };
enum class Metric { SpectralEfficiency, EnergyEfficiency };

/// Declared in output order (rows are sorted by scheme name).
enum class Scheme {
  PaEndFeeder,
  PaIdeal,
  PaLossyAntenna,
  PaMidFeeder,
  PaPassive,
  RisIdeal,
  RisPhaseNoise,
};

std::string_view to_string(SweepVariable variable);
std::string_view to_string(Metric metric);
std::string_view to_string(Scheme scheme);
SweepVariable parse_variable(std::string_view text);
Metric parse_metric(std::string_view text);
Scheme parse_scheme(std::string_view text);

bool is_ris(Scheme scheme);

struct SweepSpec {
  std::string experiment_id = "sweep";
  SweepVariable variable = SweepVariable::RisElements;
  std::vector<double> grid;
  std::vector<Scheme> schemes;
  Metric metric = Metric::SpectralEfficiency;
  mc::McOptions mc;
  UserPlacement pa_placement = UserPlacement::Uniform;
  UserPlacement ris_placement = UserPlacement::Uniform;
  RisPreLog prelog = RisPreLog::Half;
};

struct SweepRow {
  double x = 0.0;
  Scheme scheme = Scheme::PaIdeal;
  Metric metric = Metric::SpectralEfficiency;
  mc::McEstimate mc;
  std::optional<double> closed_form;
};

struct SweepResult {
  std::string experiment_id;
  SweepVariable variable = SweepVariable::RisElements;
  Metric metric = Metric::SpectralEfficiency;
  std::vector<SweepRow> rows;

  std::vector<double> grid() const;
  bool has(Scheme scheme) const;
  /// MC means of one scheme in grid order.
  std::vector<double> series(Scheme scheme) const;
  std::vector<double> ci_series(Scheme scheme) const;
  std::vector<std::optional<double>> closed_form_series(Scheme scheme) const;
};

class SweepError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws SweepError on an empty or non-increasing grid, duplicate schemes,
/// non-integer element counts, or a scheme that has no model for the metric.
void check_spec(const SweepSpec& spec);

/// Hardware settings each scheme runs with, on top of the base scenario.
Scenario scenario_for(Scheme scheme, const Scenario& base);

Scenario at_grid_point(const Scenario& base, SweepVariable variable, double x);

/// One row per (grid point, scheme), ordered by grid value then scheme name.
/// SE rows hold per-user rates; EE rows hold sum-rate efficiency in Gbit/J.
SweepResult run_sweep(const SweepSpec& spec, const Scenario& base,
                      const kernels::KernelTable& kernels = kernels::best_kernels());

/// Smallest x where a >= b, linearly interpolated between the bracketing grid
/// points; nullopt if a stays below b.
std::optional<double> crossover(std::span<const double> x, std::span<const double> a, std::span<const double> b);
std::optional<double> crossover(const SweepResult& table, Scheme a, Scheme b);

struct Peak {
  double x = 0.0;
  double value = 0.0;
};

Peak peak(const SweepResult& table, Scheme scheme);

std::vector<double> linspace(double first, double last, std::size_t count);
/// 10^first .. 10^last
std::vector<double> logspace(double first_exp, double last_exp, std::size_t count);

/// "a, b, c", "linspace(a, b, n)", "logspace(a, b, n)" or "range(start, stop, step)".
std::vector<double> parse_grid(std::string_view text);

// Reproduction presets. Each preset also adjusts the base scenario.
inline constexpr double kFig2LossyAntennaFraction = 0.55;
inline constexpr std::uint32_t kFig3RisElements = 100000;

SweepSpec fig2_spec();
void fig2_preset(Scenario& scenario);
SweepSpec fig3_spec();
void fig3_preset(Scenario& scenario);
SweepSpec fig4_spec();
void fig4_preset(Scenario& scenario);

}  // namespace pinris::experiments
