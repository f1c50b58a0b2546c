#include "v2v/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "v2v/allocators.hpp"
#include "v2v/analysis/md_interference.hpp"
#include "v2v/analysis/prp.hpp"
#include "v2v/analysis/special.hpp"
#include "v2v/analysis/stable.hpp"
#include "v2v/error.hpp"
#include "v2v/oracle.hpp"
#include "v2v/simulator.hpp"
#include "v2v/stats.hpp"

namespace v2v {

std::vector<Scenario> synthetic_highway_trace(double density, double road_length, std::size_t snapshots,
                                              double period_s, std::uint64_t seed, double v_min, double v_max) {
  if (!(density > 0) || !(road_length > 0) || !(period_s > 0) || !(v_max >= v_min) || !(v_min >= 0))
    throw DomainError("synthetic_highway_trace: invalid parameters");
  ScenarioConfig sc;
  sc.density = density;
  sc.road_length = road_length;
  sc.seed = derive_seed(seed, 0);
  const Scenario start = generate_ppp(sc);
  Rng rng(derive_seed(seed, 1));
  std::uniform_real_distribution<double> speed(v_min, v_max);
  std::bernoulli_distribution forward(0.5);
  std::vector<double> velocity(start.size());
  for (auto& v : velocity) v = speed(rng) * (forward(rng) ? 1.0 : -1.0);

  std::vector<Scenario> out;
  out.reserve(snapshots);
  std::vector<double> x = start.positions;
  for (std::size_t t = 0; t < snapshots; ++t) {
    Scenario s;
    s.road_length = road_length;
    s.wrap = false;
    s.positions = x;
    s.ids = start.ids;
    sort_scenario(s);
    out.push_back(std::move(s));
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = std::fmod(x[i] + velocity[i] * period_s, road_length);
      if (x[i] < 0) x[i] += road_length;
    }
  }
  return out;
}

void write_trace_csv(std::ostream& out, const std::vector<Scenario>& snapshots, double period_s) {
  out << "time_s,vehicle_id,position_m\n";
  out << std::setprecision(10);
  for (std::size_t t = 0; t < snapshots.size(); ++t)
    for (std::size_t i = 0; i < snapshots[t].size(); ++i)
      out << t * period_s << ',' << snapshots[t].ids[i] << ',' << snapshots[t].positions[i] << '\n';
}

SupDistance sup_distance_bounded(const EmpiricalCdf& emp, const std::function<double(double)>& cdf,
                                 std::size_t grid_points) {
  const auto& s = emp.sorted();
  if (s.empty() || grid_points < 2) throw DomainError("sup_distance_bounded: empty sample or grid");
  const double n = static_cast<double>(s.size());
  std::vector<double> grid;
  for (std::size_t i = 0; i < grid_points; ++i) {
    const auto k = static_cast<std::size_t>(std::floor((i + 0.5) / grid_points * n));
    grid.push_back(s[std::min(k, s.size() - 1)]);
  }
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  auto left = [&](double y) { return (std::lower_bound(s.begin(), s.end(), y) - s.begin()) / n; };
  std::vector<double> f(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) f[i] = cdf(grid[i]);

  SupDistance out;
  for (std::size_t i = 0; i < grid.size(); ++i)
    out.on_grid = std::max({out.on_grid, std::fabs(emp(grid[i]) - f[i]), std::fabs(left(grid[i]) - f[i])});
  double ub = std::max({out.on_grid, f.front(), left(grid.front()), 1.0 - f.back(), 1.0 - emp(grid.back())});
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    ub = std::max({ub, left(grid[i + 1]) - f[i], f[i + 1] - emp(grid[i])});
  out.upper_bound = ub;
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string fmt(double v, int prec = 4) {
  std::ostringstream os;
  os << std::setprecision(prec) << v;
  return os.str();
}

SimConfig sim_for(const Config& cfg, const ValidationOptions& opt, std::vector<AlgorithmSpec> algos,
                  std::size_t drops, std::uint64_t stream) {
  SimConfig s = cfg.sim;
  s.algorithms = std::move(algos);
  s.drops = drops;
  s.seed = derive_seed(opt.seed, stream);
  s.threads = opt.threads;
  return s;
}

// Bins lying within [25, 500] m.
bool scored_bin(const BinStats& b) { return b.lo >= 25 - 1e-9 && b.hi <= 500 + 1e-9; }

struct Agreement {
  bool pass = true;
  double worst_excess = -1;  // max of |gap| - tolerance
  std::string worst;
  int bins = 0;
};

Agreement compare_bins(const AlgorithmStats& sim, Benchmark algo, const RadioConfig& radio, double rho,
                       const ResourceGrid& grid, const AnalysisOptions& aopt, double floor_tol) {
  Agreement a;
  for (const auto& b : sim.bins) {
    if (!scored_bin(b) || b.prp.n == 0) continue;
    ++a.bins;
    const double an = prp_bin_average(algo, radio, rho, grid, b.lo, b.hi, aopt);
    const double hw = std::isfinite(b.prp.half_width) ? b.prp.half_width : 0.0;
    const double tol = std::max(floor_tol, hw);
    const double gap = std::fabs(an - b.prp.mean);
    if (gap > tol) a.pass = false;
    if (gap - tol > a.worst_excess) {
      a.worst_excess = gap - tol;
      a.worst = "bin " + fmt(b.lo) + "-" + fmt(b.hi) + " m: analysis " + fmt(an) + ", simulation " +
                fmt(b.prp.mean) + " +- " + fmt(hw, 2) + " (tolerance " + fmt(tol, 2) + ")";
    }
  }
  if (a.bins == 0) a.pass = false;
  return a;
}

CheckResult agreement_check(const Config& cfg, const ValidationOptions& opt, Benchmark algo) {
  const ResourceGrid grid = cfg.grid();
  const AlgorithmSpec spec{algo == Benchmark::rr ? AlgorithmKind::rr : AlgorithmKind::md};
  const SimConfig sim = sim_for(cfg, opt, {spec}, opt.agreement_drops, algo == Benchmark::rr ? 1 : 2);
  ScenarioSource src;
  src.ppp = cfg.scenario;
  const PrpStats st = run_experiment(sim, cfg.inputs(), src);
  const Agreement a = compare_bins(st.algorithms[0], algo, cfg.radio, cfg.scenario.density, grid, cfg.analysis, 0.02);
  CheckResult r;
  r.pass = a.pass;
  r.detail = std::to_string(a.bins) + " bins, " + std::to_string(sim.drops) + " drops; worst " + a.worst;
  return r;
}

}  // namespace

CheckResult check_rr_agreement(const Config& cfg, const ValidationOptions& opt) {
  CheckResult r = agreement_check(cfg, opt, Benchmark::rr);
  r.id = "1";
  r.title = "RR analysis vs simulation";
  return r;
}

CheckResult check_md_agreement(const Config& cfg, const ValidationOptions& opt) {
  CheckResult r = agreement_check(cfg, opt, Benchmark::md);
  r.id = "2";
  r.title = "MD analysis vs simulation, approx vs full";
  const ResourceGrid grid = cfg.grid();
  double worst = 0;
  for (double d = 25; d <= 500; d += 25) {
    const double a = prp(Benchmark::md, cfg.radio, cfg.scenario.density, grid, d, {MdMode::approximate});
    const double f = prp(Benchmark::md, cfg.radio, cfg.scenario.density, grid, d, {MdMode::full});
    worst = std::max(worst, std::fabs(a - f));
  }
  const bool modes_ok = worst <= 1e-3;
  r.pass = r.pass && modes_ok;
  r.detail += "; max |approx - full| PRP = " + fmt(worst, 3);
  return r;
}

CheckResult check_levy(const Config& cfg, const ValidationOptions&) {
  CheckResult r;
  r.id = "3";
  r.title = "stable CDF vs Levy closed form at beta = 2";
  const double rho_rr = cfg.scenario.density / cfg.grid().r_total;
  const double p0 = pr0(cfg.radio);
  const StableParams sp = stable_params_for_ppp(rho_rr, 2.0, p0);
  double worst = 0, at = 0;
  for (double y : log_grid(sp.c * 1e-3, sp.c * 1e6, 100)) {
    const double e = std::fabs(stable_cdf(sp, y) - levy_cdf_rr(rho_rr, p0, y));
    if (e > worst) worst = e, at = y;
  }
  r.pass = worst <= 1e-6;
  r.detail = "sup error " + fmt(worst, 3) + " at y = " + fmt(at, 4) + " mW (100-point log grid)";
  return r;
}

namespace {

bool has_reuse(const Allocation& a) {
  std::vector<int> seen(a.resource.size() + 1, 0);
  for (int r : a.resource)
    if (r > 0 && seen[r]++) return true;
  return false;
}

}  // namespace

CheckResult check_md_optimality(const Config&, const ValidationOptions& opt) {
  CheckResult r;
  r.id = "4";
  r.title = "MD optimality against exhaustive search";
  Rng rng(derive_seed(opt.seed, 4));
  std::uniform_int_distribution<int> r_dist(2, 3);
  std::uniform_real_distribution<double> pos(0.0, 1000.0);
  std::size_t beaten = 0;
  double worst_gain = 0;
  std::string example;
  for (std::size_t inst = 0; inst < opt.optimality_instances; ++inst) {
    // N > R, otherwise MD reuses nothing and the average is 0/0
    const int R = r_dist(rng);
    const int n = std::uniform_int_distribution<int>(R + 1, 8)(rng);
    Scenario s;
    s.road_length = 1000;
    s.wrap = false;
    for (int i = 0; i < n; ++i) {
      s.positions.push_back(pos(rng));
      s.ids.push_back(static_cast<std::uint32_t>(i));
    }
    sort_scenario(s);
    const ResourceGrid grid = ResourceGrid::make(R);
    const double md = mean_reuse_distance(s, allocate_md(s, grid));
    Allocation a;
    a.resource.assign(n, 1);
    double best = -1;
    for (;;) {
      if (has_reuse(a)) best = std::max(best, mean_reuse_distance(s, a));
      int i = 0;
      while (i < n && a.resource[i] == R) a.resource[i++] = 1;
      if (i == n) break;
      ++a.resource[i];
    }
    if (best > md * (1 + 1e-12) + 1e-9) {
      ++beaten;
      if (best - md > worst_gain) {
        worst_gain = best - md;
        example = "N=" + std::to_string(n) + ", R=" + std::to_string(R) + ": MD " + fmt(md, 5) + " m, best " +
                  fmt(best, 5) + " m";
      }
    }
  }
  r.pass = beaten == 0;
  r.detail = std::to_string(beaten) + " of " + std::to_string(opt.optimality_instances) +
             " instances beaten by exhaustive search" + (example.empty() ? "" : "; largest gap " + example);
  return r;
}

CheckResult check_half_duplex(const Config& cfg, const ValidationOptions& opt) {
  CheckResult r;
  r.id = "5";
  r.title = "half-duplex loss frequency (RR: 1/R_t, MD: Poisson sum)";
  std::ostringstream detail;
  bool pass = true;

  // RR from the simulator. Each unordered pair is scored in both
  // directions with the same outcome, so the count of independent trials
  // is half the number of scored links.
  {
    SimConfig sim = sim_for(cfg, opt, {{AlgorithmKind::rr}}, 4, 5);
    sim.periods = 3;
    ScenarioSource src;
    src.ppp = cfg.scenario;
    const PrpStats st = run_experiment(sim, cfg.inputs(), src);
    std::uint64_t hd = 0, links = 0;
    for (const auto& b : st.algorithms[0].bins) {
      hd += b.total_hd_lost();
      links += b.total_eligible();
    }
    const double p = p_hd_rr(cfg.grid());
    const double n = links / 2.0;
    const double sigma = std::sqrt(p * (1 - p) / n);
    const double phat = static_cast<double>(hd) / links;
    const bool ok = links >= 100000 && std::fabs(phat - p) <= 3 * sigma;
    pass = pass && ok;
    detail << "RR: " << fmt(phat, 5) << " vs " << fmt(p, 5) << " (" << fmt(std::fabs(phat - p) / sigma, 2)
           << " sigma, " << links << " links)";
  }

  // MD: source and destination inserted into a PPP, allocated by MD.
  struct Case {
    double rho, d;
    int rt, rf;
  };
  const Case cases[] = {{0.1, 990, 100, 1}, {0.1, 40, 5, 1}, {0.05, 150, 10, 1}, {0.1, 80, 10, 2}};
  int ci = 0;
  for (const Case& c : cases) {
    const ResourceGrid grid = ResourceGrid::make(c.rt, c.rf);
    Rng rng(derive_seed(opt.seed, 50 + ci++));
    const double margin = 200;
    std::poisson_distribution<long> count(c.rho * (c.d + 2 * margin));
    std::uniform_real_distribution<double> where(-margin, c.d + margin);
    std::size_t hits = 0;
    for (std::size_t t = 0; t < opt.hd_trials; ++t) {
      Scenario s;
      s.road_length = c.d + 2 * margin;
      s.wrap = false;
      s.positions = {margin, margin + c.d};
      s.ids = {0, 1};
      for (long k = count(rng); k > 0; --k) {
        s.positions.push_back(where(rng) + margin);
        s.ids.push_back(static_cast<std::uint32_t>(s.ids.size()));
      }
      sort_scenario(s);
      const Allocation a = allocate_md(s, grid);
      int rs = 0, rd = 0;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.ids[i] == 0) rs = a.resource[i];
        if (s.ids[i] == 1) rd = a.resource[i];
      }
      hits += same_subframe(grid, rs, rd);
    }
    const double p = p_hd_md(c.rho, c.d, grid);
    const double n = static_cast<double>(opt.hd_trials);
    const double phat = hits / n;
    const double sigma = std::sqrt(std::max(p * (1 - p), 1.0 / n) / n);
    const bool ok = opt.hd_trials >= 100000 && std::fabs(phat - p) <= 3 * sigma;
    pass = pass && ok;
    detail << "; MD rho=" << c.rho << " d=" << c.d << " R_t=" << c.rt << " R_f=" << c.rf << ": " << fmt(phat, 5)
           << " vs " << fmt(p, 5) << " (" << fmt(std::fabs(phat - p) / sigma, 2) << " sigma)";
  }
  r.pass = pass;
  r.detail = detail.str();
  return r;
}

CheckResult check_nth_neighbor(const Config&, const ValidationOptions& opt) {
  CheckResult r;
  r.id = "6";
  r.title = "n-th neighbour distance law (KS, 1% level)";
  const double rho = 0.1;
  bool pass = true;
  std::ostringstream detail;
  for (int n : {1, 5, 100}) {
    ScenarioConfig sc;
    sc.density = rho;
    sc.road_length = 3000;
    sc.wrap = false;
    std::vector<double> dist;
    for (std::size_t k = 0; dist.size() < opt.ks_samples; ++k) {
      sc.seed = derive_seed(derive_seed(opt.seed, 600 + n), k);
      const Scenario s = generate_ppp(sc);
      if (s.size() >= static_cast<std::size_t>(n)) dist.push_back(s.positions[n - 1]);
    }
    const std::size_t m = dist.size();
    const double d = ks_statistic(std::move(dist), [&](double x) { return nth_neighbor_cdf(n, rho, x); });
    const double p = ks_pvalue(d, m);
    pass = pass && p > 0.01;
    detail << (n == 1 ? "" : "; ") << "n=" << n << ": D=" << fmt(d, 3) << " p=" << fmt(p, 3);
  }
  r.pass = pass;
  r.detail = detail.str() + " (" + std::to_string(opt.ks_samples) + " samples each)";
  return r;
}

CheckResult check_sandwich(const Config& cfg, const ValidationOptions& opt) {
  CheckResult r;
  r.id = "7";
  r.title = "CRR, LGC, Mode 4 between RR and MD";
  const SimConfig sim = sim_for(cfg, opt, default_algorithms(), opt.sandwich_drops, 7);
  ScenarioSource src;
  src.ppp = cfg.scenario;
  const PrpStats st = run_experiment(sim, cfg.inputs(), src);
  const auto& rr = st.at("RR");
  const auto& md = st.at("MD");
  bool pass = true;
  int bins = 0;
  std::string worst;
  double worst_excess = -1;
  for (std::size_t b = 0; b < md.bins.size(); ++b) {
    if (md.bins[b].prp.n == 0 || md.bins[b].prp.mean < 0.5) continue;
    ++bins;
    const double lo = rr.bins[b].prp.mean - 0.02, hi = md.bins[b].prp.mean + 0.02;
    for (const auto& a : st.algorithms) {
      if (a.algorithm.kind == AlgorithmKind::rr || a.algorithm.kind == AlgorithmKind::md) continue;
      const double v = a.bins[b].prp.mean;
      const double excess = std::max(lo - v, v - hi);
      if (excess > 0) pass = false;
      if (excess > worst_excess) {
        worst_excess = excess;
        worst = a.algorithm.name() + " at " + fmt(md.bins[b].center()) + " m: " + fmt(v) + " in [" + fmt(lo) + ", " +
                fmt(hi) + "]";
      }
    }
  }
  r.pass = pass && bins > 0;
  r.detail = std::to_string(bins) + " bins with PRP_MD >= 0.5, " + std::to_string(sim.drops) + " drops; tightest " +
             worst;
  return r;
}

CheckResult check_md_threshold(const Config& cfg, const ValidationOptions&) {
  CheckResult r;
  r.id = "8";
  r.title = "MD threshold shape";
  const ResourceGrid grid = cfg.grid();
  const double p250 = prp(Benchmark::md, cfg.radio, cfg.scenario.density, grid, 250, cfg.analysis);
  const double p450 = prp(Benchmark::md, cfg.radio, cfg.scenario.density, grid, 450, cfg.analysis);
  r.pass = p250 >= 0.95 && p450 <= 0.5;
  r.detail = "PRP_MD(250 m) = " + fmt(p250, 6) + ", PRP_MD(450 m) = " + fmt(p450, 6);
  return r;
}

CheckResult check_crr_collapse(const Config& cfg, const ValidationOptions& opt) {
  CheckResult r;
  r.id = "9";
  r.title = "CRR collapse at rho = 0.2";
  const SimConfig sim = sim_for(cfg, opt, {{AlgorithmKind::crr}}, opt.crr_drops, 9);
  ScenarioSource src;
  src.ppp = cfg.scenario;
  src.ppp.density = 0.2;
  const PrpStats st = run_experiment(sim, cfg.inputs(), src);
  const auto& crr = st.algorithms[0];
  const double block = crr.blocking_fraction();
  const double d09 = crr.d09();
  r.pass = block > 0.10 && d09 == 0;
  r.detail = "blocking fraction " + fmt(block, 4) + ", simulated d0.9 = " + fmt(d09, 4) + " m (" +
             std::to_string(sim.drops) + " drops)";
  return r;
}

CheckResult check_scarcity(const Config& cfg, const ValidationOptions&) {
  CheckResult r;
  r.id = "10";
  r.title = "MD - RR gap grows as resources get scarce";
  auto gap = [&](double f_cam) {
    CamConfig cam = cfg.cam;
    cam.beacon_frequency_hz = f_cam;
    const ResourceGrid g = grid_from_cam(cam);
    return std::pair{g.r_total, prp(Benchmark::md, cfg.radio, cfg.scenario.density, g, 300, cfg.analysis) -
                                    prp(Benchmark::rr, cfg.radio, cfg.scenario.density, g, 300, cfg.analysis)};
  };
  const auto [r100, g100] = gap(10);
  const auto [r500, g500] = gap(2);
  r.pass = r100 == 100 && r500 == 500 && g100 > g500;
  r.detail = "d = 300 m: gap " + fmt(g100, 5) + " at R = " + std::to_string(r100) + ", " + fmt(g500, 5) +
             " at R = " + std::to_string(r500);
  return r;
}

CheckResult check_interference_oracles(const Config& cfg, const ValidationOptions& opt) {
  CheckResult r;
  r.id = "11";
  r.title = "interference CDFs vs Monte Carlo oracles";
  const ResourceGrid grid = cfg.grid();
  const double p0 = pr0(cfg.radio);
  const double rho = cfg.scenario.density;

  Rng rng(derive_seed(opt.seed, 11));
  RrOracleParams rp;
  rp.rho_rr = rho / grid.r_total;
  rp.beta = cfg.radio.beta;
  rp.pr0 = p0;
  const EmpiricalCdf rr_emp = interference_oracle(rp, opt.oracle_samples, rng);
  const StableParams sp = rr_stable_params(rho, grid, cfg.radio);
  const SupDistance rr = sup_distance_bounded(rr_emp, [&](double y) { return stable_cdf(sp, y); });

  const MdParams mp{rho, grid.r_total, cfg.radio.beta, p0, 120.0};
  const EmpiricalCdf md_emp = interference_oracle(mp, opt.oracle_samples, rng);
  const SupDistance mda =
      sup_distance_bounded(md_emp, [&](double y) { return md_interference_cdf(mp, y, MdMode::approximate); });
  const SupDistance mdf = sup_distance_bounded(md_emp, [&](double y) { return md_interference_cdf(mp, y, MdMode::full); });

  r.pass = rr.upper_bound <= 0.01 && mda.upper_bound <= 0.01 && mdf.upper_bound <= 0.01 &&
           opt.oracle_samples >= 100000;
  r.detail = "sup distance (grid / bound): RR " + fmt(rr.on_grid, 3) + " / " + fmt(rr.upper_bound, 3) +
             ", MD approx " + fmt(mda.on_grid, 3) + " / " + fmt(mda.upper_bound, 3) + ", MD full " +
             fmt(mdf.on_grid, 3) + " / " + fmt(mdf.upper_bound, 3) + " (" + std::to_string(opt.oracle_samples) +
             " samples)";
  return r;
}

CheckResult check_trace(const Config& cfg, const ValidationOptions& opt) {
  CheckResult r;
  r.id = "12";
  r.title = "trace mode: analysis at empirical density vs simulation";
  SimConfig sim = sim_for(cfg, opt, {{AlgorithmKind::rr}, {AlgorithmKind::md}}, opt.trace_drops, 12);
  std::vector<Scenario> synthetic;
  const std::vector<Scenario>* trace = opt.trace;
  if (!trace) {
    synthetic = synthetic_highway_trace(0.125, cfg.scenario.road_length, sim.drops * sim.periods,
                                        cfg.cam.beacon_period_s(), derive_seed(opt.seed, 120));
    trace = &synthetic;
  }
  const std::size_t used = std::min(trace->size(), sim.drops * static_cast<std::size_t>(sim.periods));
  double rho = 0;
  for (std::size_t t = 0; t < used; ++t) rho += empirical_density((*trace)[t]);
  rho /= std::max<std::size_t>(used, 1);

  ScenarioSource src;
  src.trace = trace;
  const PrpStats st = run_experiment(sim, cfg.inputs(), src);
  const ResourceGrid grid = cfg.grid();
  const Agreement a_rr = compare_bins(st.at("RR"), Benchmark::rr, cfg.radio, rho, grid, cfg.analysis, 0.03);
  const Agreement a_md = compare_bins(st.at("MD"), Benchmark::md, cfg.radio, rho, grid, cfg.analysis, 0.03);
  r.pass = a_rr.pass && a_md.pass;
  r.detail = std::string(opt.trace ? "supplied" : "synthetic") + " trace, density " + fmt(rho, 4) +
             "/m; RR worst " + a_rr.worst + "; MD worst " + a_md.worst;
  return r;
}

const std::vector<CheckFn>& all_checks() {
  static const std::vector<CheckFn> checks = {
      check_rr_agreement, check_md_agreement, check_levy,         check_md_optimality,
      check_half_duplex,  check_nth_neighbor, check_sandwich,     check_md_threshold,
      check_crr_collapse, check_scarcity,     check_interference_oracles, check_trace};
  return checks;
}

std::vector<CheckResult> run_validation(const Config& cfg, const ValidationOptions& opt,
                                        const std::function<void(const CheckResult&)>& on_result) {
  std::vector<CheckResult> out;
  for (CheckFn fn : all_checks()) {
    const auto t0 = Clock::now();
    CheckResult r = fn(cfg, opt);
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_check(const CheckResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << ": " << r.detail << " ("
     << std::fixed << std::setprecision(1) << r.seconds << " s)";
  return os.str();
}

}  // namespace v2v
