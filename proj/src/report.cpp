// SPDX-License-Identifier: Apache-2.0

#include "pinris/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace pinris::report {

std::string format_sig9(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

std::string to_csv(const experiments::SweepResult& result, const experiments::SweepSpec& spec,
                   const Scenario& scenario, const RunMetadata& meta, const std::vector<std::string>& trailer) {
  std::ostringstream os;
  os << "# schema = " << kSchema << '\n';
  os << "# tool_version = " << PINRIS_VERSION << '\n';
  os << "# experiment_id = " << result.experiment_id << '\n';
  os << "# variable = " << experiments::to_string(result.variable) << '\n';
  os << "# metric = " << experiments::to_string(result.metric) << '\n';
  os << "# seed = " << spec.mc.seed << '\n';
  os << "# trials = " << spec.mc.trials << '\n';
  os << "# kernel = " << meta.kernel << '\n';
  os << "# pa_placement = " << to_string(spec.pa_placement) << '\n';
  os << "# ris_placement = " << to_string(spec.ris_placement) << '\n';
  os << "# ris_prelog = " << to_string(spec.prelog) << '\n';
  for (const auto& [key, value] : meta.extra) os << "# " << key << " = " << value << '\n';

  std::istringstream config(serialize(scenario));
  for (std::string line; std::getline(config, line);) os << "# config." << line << '\n';

  os << kHeader << '\n';
  for (const auto& row : result.rows) {
    os << result.experiment_id << ',' << format_sig9(row.x) << ',' << experiments::to_string(row.scheme) << ','
       << experiments::to_string(row.metric) << ',' << format_sig9(row.mc.mean) << ','
       << format_sig9(row.mc.ci_half_width_95) << ',' << (row.closed_form ? format_sig9(*row.closed_form) : "")
       << ',' << row.mc.seed << ',' << row.mc.trials << '\n';
  }
  for (const auto& line : trailer) os << "# " << line << '\n';
  return os.str();
}

std::optional<std::string> CsvDocument::meta(std::string_view key) const {
  for (const auto& [k, v] : metadata) {
    if (k == key) return v;
  }
  return std::nullopt;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream is(line);
  while (std::getline(is, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

CsvDocument parse_csv(std::string_view text) {
  CsvDocument doc;
  std::istringstream is{std::string(text)};
  bool header_seen = false;
  for (std::string line; std::getline(is, line);) {
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto body = line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1);
      const auto eq = body.find(" = ");
      if (eq != std::string::npos) doc.metadata.emplace_back(body.substr(0, eq), body.substr(eq + 3));
      continue;
    }
    if (!header_seen) {
      if (line != kHeader) throw std::runtime_error("csv: unexpected header '" + line + "'");
      header_seen = true;
      continue;
    }
    const auto f = split_fields(line);
    if (f.size() != 9) throw std::runtime_error("csv: expected 9 fields, got " + std::to_string(f.size()));
    CsvRow row;
    row.experiment_id = f[0];
    row.x_value = std::stod(f[1]);
    row.scheme = f[2];
    row.metric_name = f[3];
    row.mc_mean = std::stod(f[4]);
    row.mc_ci95 = std::stod(f[5]);
    if (!f[6].empty()) row.closed_form = std::stod(f[6]);
    row.seed = std::stoull(f[7]);
    row.trials = std::stoull(f[8]);
    doc.rows.push_back(std::move(row));
  }
  if (!header_seen) throw std::runtime_error("csv: missing header row");
  return doc;
}

}  // namespace pinris::report
