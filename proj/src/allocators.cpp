#include "v2v/allocators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "v2v/error.hpp"

namespace v2v {

std::size_t Allocation::blocked_count() const {
  return static_cast<std::size_t>(std::count(resource.begin(), resource.end(), kBlocked));
}

void CrrConfig::validate() const {
  if (!(reuse_distance_m >= 0) || !(position_error_sigma_m >= 0))
    throw ConfigError("crr: distances must be >= 0");
}

Allocation allocate_rr(std::size_t n_vehicles, const ResourceGrid& grid, Rng& rng) {
  std::uniform_int_distribution<int> pick(1, grid.r_total);
  Allocation a;
  a.resource.resize(n_vehicles);
  for (auto& r : a.resource) r = pick(rng);
  return a;
}

Allocation allocate_md(const Scenario& s, const ResourceGrid& grid) {
  Allocation a;
  a.resource.resize(s.size());
  for (std::size_t n = 0; n < s.size(); ++n) a.resource[n] = static_cast<int>(n % grid.r_total) + 1;
  return a;
}

Allocation allocate_crr(const Scenario& s, const ResourceGrid& grid, const CrrConfig& cfg, Rng& rng) {
  cfg.validate();
  const std::size_t n = s.size();
  std::normal_distribution<double> error(0.0, cfg.position_error_sigma_m);
  std::vector<double> estimate(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = s.positions[i] + (cfg.position_error_sigma_m > 0 ? error(rng) : 0.0);
    if (s.wrap) x = std::fmod(std::fmod(x, s.road_length) + s.road_length, s.road_length);
    estimate[i] = x;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return estimate[a] < estimate[b]; });

  // Visiting in estimated-position order means the nearest user of a
  // resource is either its most recent user or, across the wrap seam, its
  // first one.
  constexpr double kNone = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> first(grid.r_total + 1, kNone), last(grid.r_total + 1, kNone);
  std::vector<int> feasible;
  feasible.reserve(grid.r_total);

  Allocation a;
  a.resource.assign(n, kBlocked);
  for (std::size_t i : order) {
    const double x = estimate[i];
    feasible.clear();
    for (int r = 1; r <= grid.r_total; ++r) {
      if (std::isnan(last[r])) {
        feasible.push_back(r);
        continue;
      }
      const double nearest = std::min(s.distance(x, last[r]), s.distance(x, first[r]));
      if (nearest >= cfg.reuse_distance_m) feasible.push_back(r);
    }
    if (feasible.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, feasible.size() - 1);
    const int r = feasible[pick(rng)];
    a.resource[i] = r;
    if (std::isnan(first[r])) first[r] = x;
    last[r] = x;
  }
  return a;
}

namespace {

/// Distance from x to the nearest entry of a sorted position list.
double nearest_user(const Scenario& s, const std::vector<double>& users, double x) {
  if (users.empty()) return std::numeric_limits<double>::infinity();
  const auto it = std::lower_bound(users.begin(), users.end(), x);
  double best = std::numeric_limits<double>::infinity();
  if (it != users.end()) best = std::min(best, s.distance(x, *it));
  if (it != users.begin()) best = std::min(best, s.distance(x, *std::prev(it)));
  if (s.wrap) {
    best = std::min(best, s.distance(x, users.front()));
    best = std::min(best, s.distance(x, users.back()));
  }
  return best;
}

}  // namespace

Allocation allocate_lgc(const Scenario& s, const ResourceGrid& grid, Rng& rng) {
  const std::size_t n = s.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<std::vector<double>> users(grid.r_total + 1);
  Allocation a;
  a.resource.assign(n, kBlocked);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = order[k];
    const double x = s.positions[i];
    int choice = 1;
    if (k < static_cast<std::size_t>(grid.r_total)) {
      choice = static_cast<int>(k) + 1;
    } else {
      double best = -1;
      for (int r = 1; r <= grid.r_total; ++r) {
        const double d = nearest_user(s, users[r], x);
        if (d > best) {
          best = d;
          choice = r;
        }
      }
    }
    a.resource[i] = choice;
    auto& u = users[choice];
    u.insert(std::upper_bound(u.begin(), u.end(), x), x);
  }
  return a;
}

double mean_reuse_distance(const Scenario& s, const Allocation& a) {
  double sum = 0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (a.blocked(i)) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j == i || a.resource[j] != a.resource[i]) continue;
      sum += s.distance_between(i, j);
      ++pairs;
    }
  }
  return pairs ? sum / static_cast<double>(pairs) : 0.0;
}

}  // namespace v2v
