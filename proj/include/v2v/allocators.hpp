#pragma once

#include <vector>

#include "v2v/resources.hpp"
#include "v2v/rng.hpp"
#include "v2v/scenario.hpp"

namespace v2v {

inline constexpr int kBlocked = 0;

/// Resource of each vehicle for one beacon period, in scenario order:
/// 1..R, or kBlocked when the vehicle got nothing.
struct Allocation {
  std::vector<int> resource;

  std::size_t size() const { return resource.size(); }
  bool blocked(std::size_t i) const { return resource[i] == kBlocked; }
  std::size_t blocked_count() const;
};

struct CrrConfig {
  double reuse_distance_m = 200.0;
  /// 100 m error in 95% of cases: 100 / 1.96.
  double position_error_sigma_m = 100.0 / 1.959963984540054;

  void validate() const;
};

/// Independent uniform draw on 1..R for every vehicle.
Allocation allocate_rr(std::size_t n_vehicles, const ResourceGrid& grid, Rng& rng);

/// Cyclic assignment in position order: sorted index n (0-based) gets
/// (n mod R) + 1.
Allocation allocate_md(const Scenario& s, const ResourceGrid& grid);

/// Centralized reuse-distance allocation on noisy positions. Vehicles are
/// visited in order of estimated position; each takes a uniformly chosen
/// resource whose nearest current user is at least the reuse distance away,
/// or is blocked when no such resource exists.
Allocation allocate_crr(const Scenario& s, const ResourceGrid& grid, const CrrConfig& cfg, Rng& rng);

/// Location-based graph colouring. Vehicles are visited in random order; the
/// first R take distinct resources, every later one takes the resource whose
/// nearest current user is farthest away (lowest index on ties).
Allocation allocate_lgc(const Scenario& s, const ResourceGrid& grid, Rng& rng);

/// Mean distance between vehicles sharing a resource, over ordered pairs.
/// Returns 0 when no two vehicles share a resource.
double mean_reuse_distance(const Scenario& s, const Allocation& a);

}  // namespace v2v
