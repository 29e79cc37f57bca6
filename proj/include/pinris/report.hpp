// SPDX-License-Identifier: Apache-2.0
//
// CSV output. Every file starts with '#' metadata lines (schema, tool
// version, seed, trials, kernel and the fully resolved configuration),
// followed by a fixed header row. Reals carry 9 significant digits.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pinris/config.hpp"
#include "pinris/experiments.hpp"

namespace pinris::report {

inline constexpr std::string_view kSchema = "pinris-csv/1";
inline constexpr std::string_view kHeader =
    "experiment_id,x_value,scheme,metric_name,mc_mean,mc_ci95,closed_form,seed,trials";

struct RunMetadata {
  std::string kernel;
  std::vector<std::pair<std::string, std::string>> extra;  // written as "# key = value"
};

std::string format_sig9(double value);

/// Trailer lines are appended after the rows, each prefixed by "# ".
std::string to_csv(const experiments::SweepResult& result, const experiments::SweepSpec& spec,
                   const Scenario& scenario, const RunMetadata& meta,
                   const std::vector<std::string>& trailer = {});

struct CsvRow {
  std::string experiment_id;
  double x_value = 0.0;
  std::string scheme;
  std::string metric_name;
  double mc_mean = 0.0;
  double mc_ci95 = 0.0;
  std::optional<double> closed_form;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
};

struct CsvDocument {
  std::vector<std::pair<std::string, std::string>> metadata;  // "# key = value" lines in order
  std::vector<CsvRow> rows;

  std::optional<std::string> meta(std::string_view key) const;
};

/// Parses what to_csv writes; throws std::runtime_error on schema mismatch.
CsvDocument parse_csv(std::string_view text);

}  // namespace pinris::report
