// Command-line runner for the PRP benchmark experiments.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "v2v/config.hpp"
#include "v2v/error.hpp"
#include "v2v/experiments.hpp"
#include "v2v/scenario.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kNumeric = 2, kValidation = 3 };

std::string joined_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) s += (i ? " " : "") + std::string(argv[i]);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LTE-V2V packet reception probability benchmarks"};
  std::string config_path, experiment, trace_path, out_dir = "out", algorithms, mode;
  std::string distances, densities, frequencies;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> drops;
  std::optional<unsigned> threads;

  app.add_option("--config", config_path, "INI configuration file (built-in defaults otherwise)");
  app.add_option("--experiment", experiment,
                 "prp-vs-distance | prp-vs-density | d09-vs-density | prp-vs-R | validate")
      ->required();
  app.add_option("--trace", trace_path, "vehicle trace CSV (time_s,vehicle_id,position_m)");
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--seed", seed, "master seed");
  app.add_option("--drops", drops, "replications per simulation; 0 = analysis only");
  app.add_option("--algorithms", algorithms, "comma list: rr,md,crr,lgc,m4,m4:<p_keep>");
  app.add_option("--mode", mode, "MD interference CDF: approx | full")->check(CLI::IsMember({"approx", "full"}));
  app.add_option("--distances", distances, "distance sweep, list or start:stop:step");
  app.add_option("--densities", densities, "density sweep, list or start:stop:step");
  app.add_option("--frequencies", frequencies, "CAM frequency sweep for prp-vs-R");
  app.add_option("--threads", threads, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  v2v::ExperimentSpec spec;
  v2v::Config cfg;
  std::vector<v2v::Scenario> trace;
  try {
    spec.kind = v2v::parse_experiment(experiment);
    if (!config_path.empty()) cfg = v2v::load_config(config_path);
    if (seed) cfg.sim.seed = *seed;
    if (drops) {
      if (*drops == 0)
        cfg.sweep.simulate = false;
      else
        cfg.sim.drops = *drops;
    }
    if (threads) cfg.sim.threads = *threads;
    if (!algorithms.empty()) cfg.sim.algorithms = v2v::parse_algorithm_list(algorithms, cfg.mode4.p_keep);
    if (!mode.empty()) cfg.analysis.md_mode = mode == "full" ? v2v::MdMode::full : v2v::MdMode::approximate;
    if (app.count("--distances")) cfg.sweep.distances = v2v::parse_number_list(distances);
    if (app.count("--densities")) cfg.sweep.densities = v2v::parse_number_list(densities);
    if (app.count("--frequencies")) cfg.sweep.cam_frequencies = v2v::parse_number_list(frequencies);
    cfg.resolve();
    if (!trace_path.empty()) {
      std::ifstream f(trace_path);
      if (!f) throw v2v::ConfigError("cannot open trace " + trace_path);
      trace = v2v::load_trace(f);
      spec.trace = &trace;
      spec.trace_path = trace_path;
    }
  } catch (const v2v::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }

  spec.out_dir = out_dir;
  spec.config_path = config_path;
  spec.command_line = joined_args(argc, argv);
  try {
    const auto outcome = v2v::run_experiment_spec(spec, cfg, std::cerr);
    for (const auto& f : outcome.files) std::cout << f << "\n";
    return outcome.validation_failed ? kValidation : kOk;
  } catch (const v2v::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const v2v::DomainError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const v2v::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
