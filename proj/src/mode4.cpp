#include "v2v/mode4.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "v2v/error.hpp"

namespace v2v {

void Mode4Config::validate() const {
  if (!(p_keep >= 0 && p_keep <= 1)) throw ConfigError("mode4: p_keep must be in [0, 1]");
  if (!(candidate_fraction > 0 && candidate_fraction <= 1))
    throw ConfigError("mode4: candidate_fraction must be in (0, 1]");
  if (!(beacon_period_s > 0) || !(sensing_window_s > 0)) throw ConfigError("mode4: periods must be positive");
  if (!(reselection_min_s > 0) || reselection_max_s < reselection_min_s)
    throw ConfigError("mode4: invalid reselection range");
  if (max_countdown() < min_countdown()) throw ConfigError("mode4: reselection range shorter than a period");
}

int Mode4Config::window_periods() const {
  return std::max(1, static_cast<int>(std::lround(sensing_window_s / beacon_period_s)));
}
int Mode4Config::min_countdown() const {
  return std::max(1, static_cast<int>(std::ceil(reselection_min_s / beacon_period_s - 1e-9)));
}
int Mode4Config::max_countdown() const {
  return static_cast<int>(std::floor(reselection_max_s / beacon_period_s + 1e-9));
}

SensingReport sense_period(const Scenario& s, const Allocation& a, const LinkTable& links,
                           const ResourceGrid& grid, const RadioConfig& radio) {
  const std::size_t n = s.size();
  if (a.size() != n || links.size() != n) throw DomainError("sense_period: inconsistent sizes");
  const int R = grid.r_total;
  SensingReport rep;
  rep.ids = s.ids;
  rep.r_total = R;
  rep.power_mw.assign(n * R, 0.0f);
  rep.busy.assign(n * R, 0);
  rep.sensed.assign(n * R, 1);

  std::vector<std::vector<std::size_t>> users(R + 1);
  for (std::size_t i = 0; i < n; ++i)
    if (!a.blocked(i)) users[a.resource[i]].push_back(i);

  const double noise = noise_mw(radio);
  const double gmin = gamma_min_linear(radio);
  for (std::size_t v = 0; v < n; ++v) {
    for (int r = 1; r <= R; ++r) {
      double sum = 0, strongest = 0;
      for (std::size_t tx : users[r]) {
        if (tx == v) continue;
        const double p = links.power(tx, v);
        sum += p;
        strongest = std::max(strongest, p);
      }
      const auto k = rep.index(v, r);
      rep.power_mw[k] = static_cast<float>(sum);
      rep.busy[k] = strongest > 0 && strongest / (noise + (sum - strongest)) > gmin;
      if (!a.blocked(v) && same_subframe(grid, a.resource[v], r)) rep.sensed[k] = 0;
    }
  }
  return rep;
}

std::vector<double> sensed_average(const Mode4Vehicle& v, const Mode4State& state) {
  const int R = state.r_total;
  const std::size_t W = R ? v.samples.size() / R : 0;
  std::vector<double> avg(R, 0.0);
  for (int r = 0; r < R; ++r) {
    double sum = 0;
    int count = 0;
    for (std::size_t w = 0; w < W; ++w) {
      if (!v.valid[w * R + r]) continue;
      sum += v.samples[w * R + r];
      ++count;
    }
    avg[r] = count ? sum / count : 0.0;
  }
  return avg;
}

std::vector<int> mode4_candidates(const Mode4Vehicle& v, const Mode4State& state, const ResourceGrid& grid,
                                  const Mode4Config& cfg, Rng& rng) {
  const int R = grid.r_total;
  const auto avg = sensed_average(v, state);
  const double i_th = db_to_linear(cfg.i_th_dbm);
  const long window = cfg.window_periods();

  std::vector<int> order(R);
  std::iota(order.begin(), order.end(), 1);
  std::shuffle(order.begin(), order.end(), rng);
  auto legal = [&](int r) {
    const bool busy = v.last_busy[r - 1] >= 0 && state.period - v.last_busy[r - 1] <= window;
    return !busy || avg[r - 1] < i_th;
  };
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    const bool lx = legal(x), ly = legal(y);
    if (lx != ly) return lx;
    return avg[x - 1] < avg[y - 1];
  });
  const auto k = static_cast<std::size_t>(std::ceil(cfg.candidate_fraction * R - 1e-9));
  order.resize(std::clamp<std::size_t>(k, 1, R));
  return order;
}

namespace {

int draw_countdown(const Mode4Config& cfg, Rng& rng) {
  std::uniform_int_distribution<int> d(cfg.min_countdown(), cfg.max_countdown());
  return d(rng);
}

void ingest(Mode4State& state, const SensingReport& rep, const Mode4Config& cfg) {
  if (rep.r_total != state.r_total || rep.power_mw.size() != rep.ids.size() * static_cast<std::size_t>(rep.r_total))
    throw DomainError("mode4_step: sensing report does not match the state");
  const int R = state.r_total;
  const std::size_t W = cfg.window_periods();
  const std::size_t slot = static_cast<std::size_t>(state.period % static_cast<long>(W));
  for (std::size_t row = 0; row < rep.ids.size(); ++row) {
    auto it = state.vehicles.find(rep.ids[row]);
    if (it == state.vehicles.end()) continue;
    Mode4Vehicle& v = it->second;
    for (int r = 1; r <= R; ++r) {
      const auto k = rep.index(row, r);
      v.samples[slot * R + (r - 1)] = rep.power_mw[k];
      v.valid[slot * R + (r - 1)] = rep.sensed[k];
      if (rep.busy[k] && rep.sensed[k]) v.last_busy[r - 1] = state.period;
    }
  }
}

}  // namespace

Allocation mode4_step(Mode4State& state, const Scenario& s, const ResourceGrid& grid, const SensingReport* previous,
                      const Mode4Config& cfg, Rng& rng) {
  cfg.validate();
  if (state.r_total == 0) state.r_total = grid.r_total;
  if (state.r_total != grid.r_total) throw DomainError("mode4_step: grid changed under existing state");
  if (previous) ingest(state, *previous, cfg);
  ++state.period;

  const int R = grid.r_total;
  const std::size_t W = cfg.window_periods();
  std::uniform_int_distribution<int> any(1, R);
  std::bernoulli_distribution reselect(1.0 - cfg.p_keep);

  Allocation a;
  a.resource.resize(s.size());
  std::unordered_set<std::uint32_t> present;
  present.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    present.insert(s.ids[i]);
    auto [it, fresh] = state.vehicles.try_emplace(s.ids[i]);
    Mode4Vehicle& v = it->second;
    if (fresh) {
      v.resource = any(rng);
      v.countdown = draw_countdown(cfg, rng);
      v.samples.assign(W * R, 0.0f);
      v.valid.assign(W * R, 0);
      v.last_busy.assign(R, -1);
    } else if (--v.countdown <= 0) {
      v.countdown = draw_countdown(cfg, rng);
      if (reselect(rng)) {
        const auto candidates = mode4_candidates(v, state, grid, cfg, rng);
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        v.resource = candidates[pick(rng)];
        ++state.reselections;
      }
    }
    a.resource[i] = v.resource;
  }
  if (present.size() != state.vehicles.size())
    std::erase_if(state.vehicles, [&](const auto& kv) { return !present.contains(kv.first); });
  return a;
}

}  // namespace v2v
