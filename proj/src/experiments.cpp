#include "v2v/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "v2v/analysis/prp.hpp"
#include "v2v/error.hpp"
#include "v2v/rng.hpp"
#include "v2v/simulator.hpp"
#include "v2v/validation.hpp"

namespace v2v {

ExperimentKind parse_experiment(const std::string& name) {
  if (name == "prp-vs-distance") return ExperimentKind::prp_vs_distance;
  if (name == "prp-vs-density") return ExperimentKind::prp_vs_density;
  if (name == "d09-vs-density") return ExperimentKind::d09_vs_density;
  if (name == "prp-vs-R" || name == "prp-vs-r") return ExperimentKind::prp_vs_r;
  if (name == "validate") return ExperimentKind::validate;
  throw ConfigError("unknown experiment '" + name + "'");
}

std::string experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::prp_vs_distance: return "prp-vs-distance";
    case ExperimentKind::prp_vs_density: return "prp-vs-density";
    case ExperimentKind::d09_vs_density: return "d09-vs-density";
    case ExperimentKind::prp_vs_r: return "prp-vs-R";
    case ExperimentKind::validate: return "validate";
  }
  return "?";
}

namespace {

std::string g6(double v) {
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Tags errors with the module they came from.
template <class F>
auto in_module(const char* module, F&& f) {
  try {
    return f();
  } catch (const NumericError& e) {
    throw NumericError(std::string(module) + ": " + e.what());
  } catch (const DomainError& e) {
    throw DomainError(std::string(module) + ": " + e.what());
  }
}

CsvRow analysis_row(double x, Benchmark b, double v) { return {x, to_string(b), "analysis", v}; }

CsvRow sim_row(double x, const AlgorithmStats& a, const MeanCi& ci) {
  CsvRow r{x, a.algorithm.name(), "simulation", ci.mean};
  if (std::isfinite(ci.half_width)) {
    r.ci_low = ci.low();
    r.ci_high = ci.high();
  }
  return r;
}

PrpStats simulate(const Config& cfg, const ScenarioSource& src) {
  return in_module("simulator", [&] { return run_experiment(cfg.sim, cfg.inputs(), src); });
}

const BinStats* bin_at(const AlgorithmStats& a, double d) {
  for (const auto& b : a.bins)
    if (d >= b.lo && d < b.hi) return &b;
  return nullptr;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows) {
  out << "x,algorithm,source,value,ci_low,ci_high\n";
  for (const auto& r : rows)
    out << g6(r.x) << ',' << r.algorithm << ',' << r.source << ',' << g6(r.value) << ',' << g6(r.ci_low) << ','
        << g6(r.ci_high) << '\n';
}

void write_plot_script(std::ostream& out, const std::string& csv_file, const std::string& x_label,
                       const std::string& y_label, const std::vector<CsvRow>& rows, bool log_x) {
  std::vector<std::pair<std::string, std::string>> series;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& r : rows)
    if (seen.insert({r.algorithm, r.source}).second) series.emplace_back(r.algorithm, r.source);
  out << "set datafile separator ','\n"
      << "set key outside right\n"
      << "set grid\n"
      << "set xlabel '" << x_label << "'\n"
      << "set ylabel '" << y_label << "'\n";
  if (log_x) out << "set logscale x\n";
  out << "plot \\\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& [algo, source] = series[i];
    const std::string cond = "(strcol(2) eq '" + algo + "' && strcol(3) eq '" + source + "')";
    out << "  '" << csv_file << "' every ::1 using 1:(" << cond << " ? $4 : 1/0)";
    if (source == "analysis")
      out << " with lines lw 2";
    else
      out << ":5:6 with yerrorbars pt 7 ps 0.6";
    out << " title '" << algo << " " << source << "'" << (i + 1 < series.size() ? ", \\\n" : "\n");
  }
  out << "pause mouse close\n";
}

std::vector<CsvRow> prp_vs_distance(const Config& cfg, const std::vector<Scenario>* trace) {
  std::vector<CsvRow> rows;
  const ResourceGrid grid = cfg.grid();
  double rho = cfg.scenario.density;
  ScenarioSource src;
  src.ppp = cfg.scenario;
  if (trace) {
    if (trace->empty()) throw ConfigError("trace has no snapshots");
    src.trace = trace;
    const int warm = warmup_periods(cfg.sim, cfg.inputs());
    const std::size_t used =
        std::min(trace->size(), cfg.sim.drops * static_cast<std::size_t>(warm + cfg.sim.periods));
    rho = 0;
    for (std::size_t t = 0; t < used; ++t) rho += empirical_density((*trace)[t]);
    rho /= used;
  }
  for (Benchmark b : {Benchmark::rr, Benchmark::md}) {
    const PrpCurve c =
        in_module("analysis", [&] { return prp_curve(b, cfg.radio, rho, grid, cfg.sweep.distances, cfg.analysis); });
    for (const auto& p : c.points) rows.push_back(analysis_row(p.d_sd, b, p.prp));
  }
  if (cfg.sweep.simulate) {
    const PrpStats st = simulate(cfg, src);
    for (const auto& a : st.algorithms)
      for (const auto& b : a.bins)
        if (b.prp.n) rows.push_back(sim_row(b.center(), a, b.prp));
  }
  return rows;
}

std::vector<CsvRow> prp_vs_density(const Config& cfg) {
  std::vector<CsvRow> rows;
  const ResourceGrid grid = cfg.grid();
  const double d = cfg.sweep.density_distance_m;
  for (double rho : cfg.sweep.densities) {
    for (Benchmark b : {Benchmark::rr, Benchmark::md})
      rows.push_back(
          analysis_row(rho, b, in_module("analysis", [&] { return prp(b, cfg.radio, rho, grid, d, cfg.analysis); })));
    if (!cfg.sweep.simulate) continue;
    ScenarioSource src;
    src.ppp = cfg.scenario;
    src.ppp.density = rho;
    const PrpStats st = simulate(cfg, src);
    for (const auto& a : st.algorithms)
      if (const BinStats* b = bin_at(a, d); b && b->prp.n) rows.push_back(sim_row(rho, a, b->prp));
  }
  return rows;
}

std::vector<CsvRow> d09_vs_density(const Config& cfg) {
  std::vector<CsvRow> rows;
  const ResourceGrid grid = cfg.grid();
  for (double rho : cfg.sweep.densities) {
    for (Benchmark b : {Benchmark::rr, Benchmark::md})
      rows.push_back(analysis_row(rho, b, in_module("analysis", [&] { return d09(b, cfg.radio, rho, grid, cfg.analysis); })));
    if (!cfg.sweep.simulate) continue;
    ScenarioSource src;
    src.ppp = cfg.scenario;
    src.ppp.density = rho;
    const PrpStats st = simulate(cfg, src);
    for (const auto& a : st.algorithms) rows.push_back({rho, a.algorithm.name(), "simulation", a.d09()});
  }
  return rows;
}

std::vector<CsvRow> prp_vs_r(const Config& base) {
  std::vector<CsvRow> rows;
  const double d = base.sweep.r_distance_m;
  for (double f : base.sweep.cam_frequencies) {
    Config cfg = base;
    cfg.cam.beacon_frequency_hz = f;
    cfg.resolve();
    const ResourceGrid grid = cfg.grid();
    const double x = grid.r_total;
    for (Benchmark b : {Benchmark::rr, Benchmark::md})
      rows.push_back(analysis_row(
          x, b, in_module("analysis", [&] { return prp(b, cfg.radio, cfg.scenario.density, grid, d, cfg.analysis); })));
    if (!cfg.sweep.simulate) continue;
    ScenarioSource src;
    src.ppp = cfg.scenario;
    const PrpStats st = simulate(cfg, src);
    for (const auto& a : st.algorithms)
      if (const BinStats* b = bin_at(a, d); b && b->prp.n) rows.push_back(sim_row(x, a, b->prp));
  }
  return rows;
}

namespace {

std::filesystem::path prepare_dir(const std::string& dir) {
  std::filesystem::path p(dir.empty() ? "." : dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec || !std::filesystem::is_directory(p)) throw ConfigError("cannot create output directory " + p.string());
  return p;
}

std::ofstream open_out(const std::filesystem::path& p) {
  std::ofstream f(p);
  if (!f) throw ConfigError("cannot write " + p.string());
  return f;
}

void write_manifest(std::ostream& out, const ExperimentSpec& spec, const Config& cfg) {
  out << "# experiment: " << experiment_name(spec.kind) << "\n";
  if (!spec.command_line.empty()) out << "# command: " << spec.command_line << "\n";
  out << "# config file: " << (spec.config_path.empty() ? "(built-in defaults)" : spec.config_path) << "\n";
  if (!spec.trace_path.empty()) out << "# trace: " << spec.trace_path << "\n";
  out << "# replication k uses seed derive_seed(" << cfg.sim.seed << ", k):\n#";
  for (std::size_t k = 0; k < cfg.sim.drops; ++k) {
    out << ' ' << derive_seed(cfg.sim.seed, k);
    if (k % 6 == 5 && k + 1 < cfg.sim.drops) out << "\n#";
  }
  out << "\n\n";
  write_config(out, cfg);
}

}  // namespace

ExperimentOutcome run_experiment_spec(const ExperimentSpec& spec, const Config& cfg, std::ostream& log) {
  if (spec.trace && spec.kind != ExperimentKind::prp_vs_distance && spec.kind != ExperimentKind::validate)
    throw ConfigError("a trace can only drive prp-vs-distance or validate");
  const auto dir = prepare_dir(spec.out_dir);
  const std::string name = experiment_name(spec.kind);
  ExperimentOutcome outcome;

  if (spec.kind == ExperimentKind::validate) {
    ValidationOptions opt;
    opt.seed = cfg.sim.seed;
    opt.agreement_drops = std::max<std::size_t>(cfg.sim.drops, 2);
    opt.trace = spec.trace;
    opt.threads = cfg.sim.threads;
    const auto path = dir / "validate.txt";
    std::ofstream report = open_out(path);
    for (const auto& r : run_validation(cfg, opt, [&](const CheckResult& r) {
           log << format_check(r) << std::endl;
           report << format_check(r) << std::endl;
         }))
      outcome.validation_failed = outcome.validation_failed || !r.pass;
    outcome.files.push_back(path.string());
    std::ofstream m = open_out(dir / "validate.manifest.ini");
    write_manifest(m, spec, cfg);
    outcome.files.push_back((dir / "validate.manifest.ini").string());
    return outcome;
  }

  std::vector<CsvRow> rows;
  std::string x_label, y_label = "packet reception probability";
  bool log_x = false;
  log << name << ": running" << std::endl;
  switch (spec.kind) {
    case ExperimentKind::prp_vs_distance:
      rows = prp_vs_distance(cfg, spec.trace);
      x_label = "source-destination distance (m)";
      break;
    case ExperimentKind::prp_vs_density:
      rows = prp_vs_density(cfg);
      x_label = "vehicle density (vehicles/m)";
      break;
    case ExperimentKind::d09_vs_density:
      rows = d09_vs_density(cfg);
      x_label = "vehicle density (vehicles/m)";
      y_label = "d_0.9 (m)";
      break;
    case ExperimentKind::prp_vs_r:
      rows = prp_vs_r(cfg);
      x_label = "resources per beacon period R";
      log_x = true;
      break;
    case ExperimentKind::validate: break;
  }
  const auto csv = dir / (name + ".csv");
  const auto gp = dir / (name + ".gp");
  const auto manifest = dir / (name + ".manifest.ini");
  {
    std::ofstream f = open_out(csv);
    write_csv(f, rows);
  }
  {
    std::ofstream f = open_out(gp);
    write_plot_script(f, csv.filename().string(), x_label, y_label, rows, log_x);
  }
  {
    std::ofstream f = open_out(manifest);
    write_manifest(f, spec, cfg);
  }
  outcome.files = {csv.string(), gp.string(), manifest.string()};
  log << name << ": wrote " << rows.size() << " rows" << std::endl;
  return outcome;
}

}  // namespace v2v
