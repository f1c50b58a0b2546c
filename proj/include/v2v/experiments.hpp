#pragma once

#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "v2v/config.hpp"
#include "v2v/scenario.hpp"

namespace v2v {

enum class ExperimentKind { prp_vs_distance, prp_vs_density, d09_vs_density, prp_vs_r, validate };

/// prp-vs-distance, prp-vs-density, d09-vs-density, prp-vs-R, validate.
ExperimentKind parse_experiment(const std::string& name);
std::string experiment_name(ExperimentKind kind);

struct CsvRow {
  double x = 0;
  std::string algorithm;
  std::string source;  // analysis | simulation
  double value = 0;
  double ci_low = std::numeric_limits<double>::quiet_NaN();
  double ci_high = std::numeric_limits<double>::quiet_NaN();
};

/// `x,algorithm,source,value,ci_low,ci_high`, six significant digits, empty
/// CI fields for analysis rows.
void write_csv(std::ostream& out, const std::vector<CsvRow>& rows);

/// gnuplot script drawing every (algorithm, source) series of `csv_file`.
void write_plot_script(std::ostream& out, const std::string& csv_file, const std::string& x_label,
                       const std::string& y_label, const std::vector<CsvRow>& rows, bool log_x = false);

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::prp_vs_distance;
  std::string out_dir = ".";
  std::string config_path;  // informational, recorded in the manifest
  std::string trace_path;
  const std::vector<Scenario>* trace = nullptr;
  std::string command_line;
};

std::vector<CsvRow> prp_vs_distance(const Config& cfg, const std::vector<Scenario>* trace = nullptr);
std::vector<CsvRow> prp_vs_density(const Config& cfg);
std::vector<CsvRow> d09_vs_density(const Config& cfg);
std::vector<CsvRow> prp_vs_r(const Config& cfg);

struct ExperimentOutcome {
  std::vector<std::string> files;
  bool validation_failed = false;
};

/// Runs the experiment and writes `<name>.csv`, `<name>.gp` and
/// `<name>.manifest.ini` (or `validate.txt`) into spec.out_dir. Progress
/// goes to `log`.
ExperimentOutcome run_experiment_spec(const ExperimentSpec& spec, const Config& cfg, std::ostream& log);

}  // namespace v2v
