#include "v2v/simulator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "v2v/error.hpp"
#include "v2v/parallel.hpp"
#include "v2v/shadowing.hpp"

namespace v2v {

std::string AlgorithmSpec::name() const {
  switch (kind) {
    case AlgorithmKind::rr: return "RR";
    case AlgorithmKind::md: return "MD";
    case AlgorithmKind::crr: return "CRR";
    case AlgorithmKind::lgc: return "LGC";
    case AlgorithmKind::mode4: {
      std::ostringstream os;
      os << "M4-" << p_keep;
      return os.str();
    }
  }
  return "?";
}

AlgorithmSpec parse_algorithm(const std::string& text, double default_p_keep) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "rr") return {AlgorithmKind::rr};
  if (t == "md") return {AlgorithmKind::md};
  if (t == "crr") return {AlgorithmKind::crr};
  if (t == "lgc") return {AlgorithmKind::lgc};
  if (t == "m4" || t == "mode4") return {AlgorithmKind::mode4, default_p_keep};
  for (const char* prefix : {"m4:", "m4-", "mode4:"}) {
    const std::string p(prefix);
    if (t.rfind(p, 0) != 0) continue;
    try {
      std::size_t used = 0;
      const double v = std::stod(t.substr(p.size()), &used);
      if (used == t.size() - p.size() && v >= 0 && v <= 1) return {AlgorithmKind::mode4, v};
    } catch (const std::exception&) {
    }
  }
  throw ConfigError("unknown algorithm '" + text + "'");
}

std::vector<AlgorithmSpec> parse_algorithm_list(const std::string& csv, double default_p_keep) {
  std::vector<AlgorithmSpec> out;
  std::stringstream ss(csv);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(parse_algorithm(item, default_p_keep));
  }
  if (out.empty()) throw ConfigError("empty algorithm list");
  return out;
}

std::vector<AlgorithmSpec> default_algorithms() {
  return {{AlgorithmKind::rr},  {AlgorithmKind::md},         {AlgorithmKind::crr},
          {AlgorithmKind::lgc}, {AlgorithmKind::mode4, 0.0}, {AlgorithmKind::mode4, 0.8}};
}

namespace {

class RrAllocator : public Allocator {
 public:
  explicit RrAllocator(ResourceGrid g) : grid_(g) {}
  Allocation allocate(const Scenario& s, Rng& rng) override { return allocate_rr(s.size(), grid_, rng); }

 private:
  ResourceGrid grid_;
};

class MdAllocator : public Allocator {
 public:
  explicit MdAllocator(ResourceGrid g) : grid_(g) {}
  Allocation allocate(const Scenario& s, Rng&) override { return allocate_md(s, grid_); }

 private:
  ResourceGrid grid_;
};

class CrrAllocator : public Allocator {
 public:
  CrrAllocator(ResourceGrid g, CrrConfig c) : grid_(g), cfg_(c) {}
  Allocation allocate(const Scenario& s, Rng& rng) override { return allocate_crr(s, grid_, cfg_, rng); }

 private:
  ResourceGrid grid_;
  CrrConfig cfg_;
};

class LgcAllocator : public Allocator {
 public:
  explicit LgcAllocator(ResourceGrid g) : grid_(g) {}
  Allocation allocate(const Scenario& s, Rng& rng) override { return allocate_lgc(s, grid_, rng); }

 private:
  ResourceGrid grid_;
};

class Mode4Allocator : public Allocator {
 public:
  Mode4Allocator(const SimInputs& in, double p_keep) : grid_(in.grid), radio_(in.radio), cfg_(in.mode4) {
    cfg_.p_keep = p_keep;
    cfg_.validate();
  }
  Allocation allocate(const Scenario& s, Rng& rng) override {
    return mode4_step(state_, s, grid_, report_ ? &*report_ : nullptr, cfg_, rng);
  }
  void observe(const Scenario& s, const Allocation& a, const LinkTable& links) override {
    report_ = sense_period(s, a, links, grid_, radio_);
  }
  bool stateful() const override { return true; }

 private:
  ResourceGrid grid_;
  RadioConfig radio_;
  Mode4Config cfg_;
  Mode4State state_;
  std::optional<SensingReport> report_;
};

}  // namespace

std::unique_ptr<Allocator> make_allocator(const AlgorithmSpec& spec, const SimInputs& in) {
  switch (spec.kind) {
    case AlgorithmKind::rr: return std::make_unique<RrAllocator>(in.grid);
    case AlgorithmKind::md: return std::make_unique<MdAllocator>(in.grid);
    case AlgorithmKind::crr: return std::make_unique<CrrAllocator>(in.grid, in.crr);
    case AlgorithmKind::lgc: return std::make_unique<LgcAllocator>(in.grid);
    case AlgorithmKind::mode4: return std::make_unique<Mode4Allocator>(in, spec.p_keep);
  }
  throw ConfigError("make_allocator: unknown algorithm");
}

void BinCounts::add(const BinCounts& o) {
  if (o.received.size() != received.size()) throw DomainError("BinCounts::add: bin count mismatch");
  for (std::size_t b = 0; b < received.size(); ++b) {
    received[b] += o.received[b];
    eligible[b] += o.eligible[b];
    hd_lost[b] += o.hd_lost[b];
  }
  blocked += o.blocked;
  vehicle_periods += o.vehicle_periods;
}

void evaluate_period(const Scenario& s, const LinkTable& links, const Allocation& a, const ResourceGrid& grid,
                     const RadioConfig& radio, std::span<const double> bin_edges, BinCounts& out, double tx_lo,
                     double tx_hi) {
  const std::size_t n = s.size();
  if (a.size() != n || links.size() != n) throw DomainError("evaluate_period: inconsistent sizes");
  if (bin_edges.size() < 2) throw DomainError("evaluate_period: need at least one bin");
  if (out.received.size() != bin_edges.size() - 1) throw DomainError("evaluate_period: bin count mismatch");
  const int R = grid.r_total;
  const double max_d = bin_edges.back();

  // Total power each receiver collects on each resource.
  std::vector<double> total(n * R, 0.0);
  for (std::size_t tx = 0; tx < n; ++tx) {
    if (a.blocked(tx)) continue;
    const int r = a.resource[tx] - 1;
    for (std::size_t rx = 0; rx < n; ++rx) total[rx * R + r] += links.power(tx, rx);
  }

  const double noise = noise_mw(radio);
  const double gmin = gamma_min_linear(radio);
  out.vehicle_periods += n;
  out.blocked += a.blocked_count();
  for (std::size_t tx = 0; tx < n; ++tx) {
    if (s.positions[tx] < tx_lo || s.positions[tx] > tx_hi) continue;
    const bool tx_blocked = a.blocked(tx);
    for (std::size_t rx = 0; rx < n; ++rx) {
      if (rx == tx) continue;
      const double d = s.distance_between(tx, rx);
      if (!(d < max_d) || d < bin_edges.front()) continue;
      const auto bin = static_cast<std::size_t>(std::upper_bound(bin_edges.begin(), bin_edges.end(), d) -
                                                bin_edges.begin() - 1);
      ++out.eligible[bin];
      if (tx_blocked) continue;
      if (!a.blocked(rx) && same_subframe(grid, a.resource[tx], a.resource[rx])) {
        ++out.hd_lost[bin];
        continue;
      }
      const double p = links.power(tx, rx);
      const double interference = std::max(0.0, total[rx * R + (a.resource[tx] - 1)] - p);
      if (p / (noise + interference) > gmin) ++out.received[bin];
    }
  }
}

BinCounts run_drop(const Scenario& s, const ResourceGrid& grid, const RadioConfig& radio, Allocator& allocator,
                   int periods, Rng& rng, std::span<const double> bin_edges, int warmup) {
  if (periods < 1 || warmup < 0) throw DomainError("run_drop: invalid period counts");
  ShadowField shadow(radio.shadow_sigma_db, radio.decorr_distance_m, rng());
  const LinkTable links(s, radio, shadow);
  BinCounts counts(bin_edges.size() - 1);
  for (int t = 0; t < warmup + periods; ++t) {
    const Allocation a = allocator.allocate(s, rng);
    if (t >= warmup) evaluate_period(s, links, a, grid, radio, bin_edges, counts);
    allocator.observe(s, a, links);
  }
  return counts;
}

std::vector<double> SimConfig::default_bins() {
  std::vector<double> e;
  for (int i = 0; i <= 24; ++i) e.push_back(25.0 * i);
  return e;
}

void SimConfig::validate() const {
  if (drops < 2) throw ConfigError("sim: drops must be at least 2");
  if (periods < 1) throw ConfigError("sim: periods must be positive");
  if (!(eval_margin_m >= 0)) throw ConfigError("sim: eval_margin_m must be nonnegative");
  if (!(warmup_s >= 0)) throw ConfigError("sim: warmup must be nonnegative");
  if (bin_edges.size() < 2) throw ConfigError("sim: need at least one distance bin");
  if (!(bin_edges.front() >= 0)) throw ConfigError("sim: bin edges must be nonnegative");
  for (std::size_t i = 1; i < bin_edges.size(); ++i)
    if (!(bin_edges[i] > bin_edges[i - 1])) throw ConfigError("sim: bin edges must increase strictly");
  if (algorithms.empty()) throw ConfigError("sim: no algorithms");
}

std::uint64_t BinStats::total_received() const {
  std::uint64_t t = 0;
  for (auto v : received) t += v;
  return t;
}
std::uint64_t BinStats::total_eligible() const {
  std::uint64_t t = 0;
  for (auto v : eligible) t += v;
  return t;
}
std::uint64_t BinStats::total_hd_lost() const {
  std::uint64_t t = 0;
  for (auto v : hd_lost) t += v;
  return t;
}

double AlgorithmStats::blocking_fraction() const {
  return vehicle_periods ? static_cast<double>(blocked) / vehicle_periods : 0.0;
}

double AlgorithmStats::d09() const {
  constexpr double kThreshold = 0.9;
  std::size_t last = bins.size();
  for (std::size_t b = 0; b < bins.size(); ++b)
    if (bins[b].prp.n > 0 && bins[b].prp.mean > kThreshold) last = b;
  if (last == bins.size()) return 0.0;
  if (last + 1 == bins.size() || bins[last + 1].prp.n == 0) return bins[last].center();
  const double x0 = bins[last].center(), x1 = bins[last + 1].center();
  const double y0 = bins[last].prp.mean, y1 = bins[last + 1].prp.mean;
  return x0 + (x1 - x0) * (y0 - kThreshold) / (y0 - y1);
}

const AlgorithmStats& PrpStats::at(const std::string& name) const {
  for (const auto& a : algorithms)
    if (a.algorithm.name() == name) return a;
  throw Error("no statistics for algorithm " + name);
}

int warmup_periods(const SimConfig& cfg, const SimInputs& in) {
  const bool any_mode4 = std::any_of(cfg.algorithms.begin(), cfg.algorithms.end(),
                                     [](const AlgorithmSpec& a) { return a.kind == AlgorithmKind::mode4; });
  if (!any_mode4) return 0;
  return static_cast<int>(std::lround(cfg.warmup_s / in.mode4.beacon_period_s));
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

std::vector<BinCounts> run_replication(const SimConfig& cfg, const SimInputs& in, const ScenarioSource& source,
                                       std::size_t k, int warmup) {
  const std::uint64_t seed = derive_seed(cfg.seed, k);
  const std::size_t n_algos = cfg.algorithms.size();
  const std::size_t n_bins = cfg.bin_edges.size() - 1;
  std::vector<std::unique_ptr<Allocator>> allocators;
  std::vector<Rng> rngs;
  for (const auto& spec : cfg.algorithms) {
    allocators.push_back(make_allocator(spec, in));
    rngs.emplace_back(derive_seed(seed, fnv1a(spec.name())));
  }
  std::vector<BinCounts> counts(n_algos, BinCounts(n_bins));
  ShadowField shadow(in.radio.shadow_sigma_db, in.radio.decorr_distance_m, derive_seed(seed, 1));
  const int total_periods = warmup + cfg.periods;

  auto period = [&](const Scenario& s, const LinkTable& links, int t) {
    double lo = -std::numeric_limits<double>::infinity(), hi = std::numeric_limits<double>::infinity();
    if (!s.wrap) {
      lo = cfg.eval_margin_m;
      hi = s.road_length - cfg.eval_margin_m;
      if (!(hi > lo)) throw ConfigError("sim: road too short for the evaluation margin");
    }
    for (std::size_t i = 0; i < n_algos; ++i) {
      Allocator& alloc = *allocators[i];
      if (t < warmup && !alloc.stateful()) continue;
      const Allocation a = alloc.allocate(s, rngs[i]);
      if (t >= warmup) evaluate_period(s, links, a, in.grid, in.radio, cfg.bin_edges, counts[i], lo, hi);
      alloc.observe(s, a, links);
    }
  };

  if (!source.trace) {
    ScenarioConfig sc = source.ppp;
    sc.seed = derive_seed(seed, 0);
    const Scenario s = generate_ppp(sc);
    const LinkTable links(s, in.radio, shadow);
    for (int t = 0; t < total_periods; ++t) period(s, links, t);
    return counts;
  }

  const auto& trace = *source.trace;
  const std::size_t first = k * static_cast<std::size_t>(total_periods);
  std::unordered_map<std::uint32_t, std::pair<double, double>> odo;  // id -> (last position, odometer)
  for (int t = 0; t < total_periods; ++t) {
    const Scenario& s = trace[first + t];
    std::vector<double> odometers(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      auto [it, fresh] = odo.try_emplace(s.ids[i], s.positions[i], 0.0);
      if (!fresh) {
        it->second.second += s.distance(it->second.first, s.positions[i]);
        it->second.first = s.positions[i];
      }
      odometers[i] = it->second.second;
    }
    shadow.set_epoch(t);
    const LinkTable links(s, in.radio, shadow, odometers);
    shadow.forget_before(t);
    period(s, links, t);
  }
  return counts;
}

}  // namespace

PrpStats run_experiment(const SimConfig& cfg, const SimInputs& in, const ScenarioSource& source) {
  cfg.validate();
  in.radio.validate();
  in.grid.validate();
  in.crr.validate();
  in.mode4.validate();
  SimInputs inputs = in;
  if (cfg.dual_slope && !inputs.radio.dual_slope) inputs.radio.dual_slope = DualSlope{};

  const int warmup = warmup_periods(cfg, inputs);
  if (source.trace) {
    const std::size_t need = cfg.drops * static_cast<std::size_t>(warmup + cfg.periods);
    if (source.trace->size() < need) {
      std::ostringstream os;
      os << "trace exhausted: " << cfg.drops << " drops of " << (warmup + cfg.periods) << " periods need " << need
         << " snapshots, trace has " << source.trace->size();
      throw Error(os.str());
    }
  } else {
    source.ppp.validate();
    if (!source.ppp.wrap && !(source.ppp.road_length > 2 * cfg.eval_margin_m))
      throw ConfigError("sim: road too short for the evaluation margin");
  }

  std::vector<std::vector<BinCounts>> per_drop(cfg.drops);
  parallel_for(
      cfg.drops, [&](std::size_t k) { per_drop[k] = run_replication(cfg, inputs, source, k, warmup); },
      cfg.threads);

  PrpStats stats;
  stats.drops = cfg.drops;
  const std::size_t n_bins = cfg.bin_edges.size() - 1;
  for (std::size_t i = 0; i < cfg.algorithms.size(); ++i) {
    AlgorithmStats as;
    as.algorithm = cfg.algorithms[i];
    as.bins.resize(n_bins);
    for (std::size_t b = 0; b < n_bins; ++b) {
      BinStats& bs = as.bins[b];
      bs.lo = cfg.bin_edges[b];
      bs.hi = cfg.bin_edges[b + 1];
      std::vector<double> ratios;
      for (std::size_t k = 0; k < cfg.drops; ++k) {
        const BinCounts& c = per_drop[k][i];
        bs.received.push_back(c.received[b]);
        bs.eligible.push_back(c.eligible[b]);
        bs.hd_lost.push_back(c.hd_lost[b]);
        if (c.eligible[b]) ratios.push_back(static_cast<double>(c.received[b]) / c.eligible[b]);
      }
      if (!ratios.empty()) bs.prp = student_t_ci(ratios);
    }
    for (std::size_t k = 0; k < cfg.drops; ++k) {
      const BinCounts& c = per_drop[k][i];
      as.blocked += c.blocked;
      as.vehicle_periods += c.vehicle_periods;
      as.blocking_per_drop.push_back(c.vehicle_periods ? static_cast<double>(c.blocked) / c.vehicle_periods : 0.0);
    }
    stats.algorithms.push_back(std::move(as));
  }
  return stats;
}

}  // namespace v2v
