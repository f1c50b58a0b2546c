#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "v2v/config.hpp"
#include "v2v/scenario.hpp"
#include "v2v/stats.hpp"

namespace v2v {

struct CheckResult {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct ValidationOptions {
  std::uint64_t seed = 20241016;
  std::size_t agreement_drops = 200;  // RR / MD analysis vs simulation
  std::size_t sandwich_drops = 30;
  std::size_t crr_drops = 20;
  std::size_t trace_drops = 30;
  std::size_t oracle_samples = 200000;
  std::size_t hd_trials = 100000;
  std::size_t ks_samples = 2000;
  std::size_t optimality_instances = 100;
  /// Trace for the trace-mode check; a synthetic highway is generated
  /// when null.
  const std::vector<Scenario>* trace = nullptr;
  unsigned threads = 0;
};

/// Vehicles on a road of the given length: PPP initial positions, each
/// moving at its own speed (uniform in [v_min, v_max], random direction)
/// and re-entering at the opposite end when it leaves. One snapshot per
/// period, ids stable.
std::vector<Scenario> synthetic_highway_trace(double density, double road_length, std::size_t snapshots,
                                              double period_s, std::uint64_t seed, double v_min = 22.0,
                                              double v_max = 36.0);

/// Writes snapshots as a `time_s,vehicle_id,position_m` CSV.
void write_trace_csv(std::ostream& out, const std::vector<Scenario>& snapshots, double period_s);

/// Sup distance between an empirical and a continuous CDF, evaluated on a
/// grid of sample quantiles, plus an upper bound on the true sup distance
/// that uses the monotonicity of both functions between grid points.
struct SupDistance {
  double on_grid = 0;
  double upper_bound = 0;
};
SupDistance sup_distance_bounded(const EmpiricalCdf& emp, const std::function<double(double)>& cdf,
                                 std::size_t grid_points = 1000);

// One function per acceptance criterion. `cfg` supplies the defaults.
CheckResult check_rr_agreement(const Config& cfg, const ValidationOptions& opt);
CheckResult check_md_agreement(const Config& cfg, const ValidationOptions& opt);
CheckResult check_levy(const Config& cfg, const ValidationOptions& opt);
CheckResult check_md_optimality(const Config& cfg, const ValidationOptions& opt);
CheckResult check_half_duplex(const Config& cfg, const ValidationOptions& opt);
CheckResult check_nth_neighbor(const Config& cfg, const ValidationOptions& opt);
CheckResult check_sandwich(const Config& cfg, const ValidationOptions& opt);
CheckResult check_md_threshold(const Config& cfg, const ValidationOptions& opt);
CheckResult check_crr_collapse(const Config& cfg, const ValidationOptions& opt);
CheckResult check_scarcity(const Config& cfg, const ValidationOptions& opt);
CheckResult check_interference_oracles(const Config& cfg, const ValidationOptions& opt);
CheckResult check_trace(const Config& cfg, const ValidationOptions& opt);

using CheckFn = CheckResult (*)(const Config&, const ValidationOptions&);
const std::vector<CheckFn>& all_checks();

/// Runs every check, reporting each result through `on_result` as it
/// completes.
std::vector<CheckResult> run_validation(const Config& cfg, const ValidationOptions& opt,
                                        const std::function<void(const CheckResult&)>& on_result = {});

/// "PASS [id] title: detail (12.3 s)".
std::string format_check(const CheckResult& r);

}  // namespace v2v
