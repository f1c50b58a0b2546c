#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "v2v/allocators.hpp"
#include "v2v/link_table.hpp"
#include "v2v/mode4.hpp"
#include "v2v/radio.hpp"
#include "v2v/resources.hpp"
#include "v2v/scenario.hpp"
#include "v2v/stats.hpp"

namespace v2v {

enum class AlgorithmKind { rr, md, crr, lgc, mode4 };

struct AlgorithmSpec {
  AlgorithmKind kind = AlgorithmKind::rr;
  double p_keep = 0.0;  // Mode 4 only

  /// "RR", "MD", "CRR", "LGC", "M4-0", "M4-0.8", ...
  std::string name() const;
  bool operator==(const AlgorithmSpec&) const = default;
};

/// Accepts rr, md, crr, lgc, m4 (p_keep = `default_p_keep`) and m4:<p_keep>,
/// case-insensitive. Throws ConfigError otherwise.
AlgorithmSpec parse_algorithm(const std::string& text, double default_p_keep = 0.0);
std::vector<AlgorithmSpec> parse_algorithm_list(const std::string& csv, double default_p_keep = 0.0);

/// RR, MD, CRR, LGC, M4 with p_keep 0 and 0.8.
std::vector<AlgorithmSpec> default_algorithms();

/// Models shared by every allocator of a run.
struct SimInputs {
  RadioConfig radio;
  ResourceGrid grid;
  CrrConfig crr;
  Mode4Config mode4;
};

class Allocator {
 public:
  virtual ~Allocator() = default;
  virtual Allocation allocate(const Scenario& s, Rng& rng) = 0;
  /// Called after every period with the allocation that was used.
  virtual void observe(const Scenario&, const Allocation&, const LinkTable&) {}
  virtual bool stateful() const { return false; }
};

std::unique_ptr<Allocator> make_allocator(const AlgorithmSpec& spec, const SimInputs& in);

/// Link outcomes of one drop, per distance bin.
struct BinCounts {
  std::vector<std::uint64_t> received;
  std::vector<std::uint64_t> eligible;
  std::vector<std::uint64_t> hd_lost;  // same-subframe losses
  std::uint64_t blocked = 0;           // vehicle-periods without a resource
  std::uint64_t vehicle_periods = 0;

  explicit BinCounts(std::size_t bins = 0) : received(bins), eligible(bins), hd_lost(bins) {}
  void add(const BinCounts& other);
};

/// Scores every transmitter against every receiver closer than the last
/// bin edge. A blocked transmitter is never received. A receiver sharing
/// the transmitter's subframe loses the packet; otherwise it decodes when
/// SINR with all co-resource transmitters exceeds the threshold. Only
/// transmitters positioned inside [tx_lo, tx_hi] are scored.
void evaluate_period(const Scenario& s, const LinkTable& links, const Allocation& a, const ResourceGrid& grid,
                     const RadioConfig& radio, std::span<const double> bin_edges, BinCounts& out,
                     double tx_lo = -std::numeric_limits<double>::infinity(),
                     double tx_hi = std::numeric_limits<double>::infinity());

/// One static drop with a single allocator: `warmup` unscored periods, then
/// `periods` scored ones. Shadowing is drawn from `rng`.
BinCounts run_drop(const Scenario& s, const ResourceGrid& grid, const RadioConfig& radio, Allocator& allocator,
                   int periods, Rng& rng, std::span<const double> bin_edges, int warmup = 0);

struct SimConfig {
  std::size_t drops = 200;
  int periods = 10;       // scored beacon periods per drop
  double warmup_s = 2.0;  // unscored lead-in when Mode 4 is simulated
  std::vector<double> bin_edges = default_bins();
  std::vector<AlgorithmSpec> algorithms = default_algorithms();
  std::uint64_t seed = 1;
  bool dual_slope = false;
  /// On a road that does not wrap, only transmitters at least this far from
  /// both ends are scored, so every scored link sees interferers on both
  /// sides.
  double eval_margin_m = 2000;
  unsigned threads = 0;  // 0: hardware concurrency

  static std::vector<double> default_bins();  // 0, 25, ..., 600
  void validate() const;
  double max_eval_distance_m() const { return bin_edges.back(); }
};

struct BinStats {
  double lo = 0, hi = 0;
  std::vector<std::uint64_t> received, eligible, hd_lost;  // per drop
  MeanCi prp;  // across drops with at least one eligible link

  std::uint64_t total_received() const;
  std::uint64_t total_eligible() const;
  std::uint64_t total_hd_lost() const;
  double center() const { return 0.5 * (lo + hi); }
};

struct AlgorithmStats {
  AlgorithmSpec algorithm;
  std::vector<BinStats> bins;
  std::vector<double> blocking_per_drop;
  std::uint64_t blocked = 0;
  std::uint64_t vehicle_periods = 0;

  double blocking_fraction() const;
  /// Largest distance with simulated PRP > 0.9, interpolated between bin
  /// centres; 0 when no bin exceeds 0.9.
  double d09() const;
};

struct PrpStats {
  std::vector<AlgorithmStats> algorithms;
  std::size_t drops = 0;

  const AlgorithmStats& at(const std::string& name) const;
};

/// Where the vehicles come from: fresh PPP drops, or consecutive windows of
/// a trace (one snapshot per beacon period).
struct ScenarioSource {
  ScenarioConfig ppp;
  const std::vector<Scenario>* trace = nullptr;
};

/// Warm-up periods implied by the configuration (0 unless Mode 4 runs).
int warmup_periods(const SimConfig& cfg, const SimInputs& in);

/// Runs all replications (in parallel) and merges them in replication order.
/// Replication k uses seed derive_seed(cfg.seed, k). Throws Error when a
/// trace has too few snapshots for the requested drops.
PrpStats run_experiment(const SimConfig& cfg, const SimInputs& in, const ScenarioSource& source);

}  // namespace v2v
