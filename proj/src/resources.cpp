#include "v2v/resources.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "v2v/error.hpp"

namespace v2v {

ResourceGrid ResourceGrid::make(int r_time, int r_freq) {
  ResourceGrid g{r_time * r_freq, r_time, r_freq};
  g.validate();
  return g;
}

void ResourceGrid::validate() const {
  if (r_time < 1 || r_freq < 1 || r_total != r_time * r_freq)
    throw ConfigError("resource grid must satisfy R = R_f * R_t with all counts >= 1");
}

void CamConfig::validate() const {
  if (!std::isfinite(beacon_frequency_hz) || beacon_frequency_hz <= 0)
    throw ConfigError("cam: beacon_frequency_hz must be positive");
  if (beacon_size_bytes <= 0 || rbs_per_cam <= 0 || rb_pairs_per_subframe <= 0)
    throw ConfigError("cam: sizes must be positive");
}

ResourceGrid grid_from_cam(const CamConfig& cfg) {
  cfg.validate();
  // Small epsilon so that e.g. 1000/10 is not truncated to 99 by rounding.
  const int r_time = static_cast<int>(std::floor(1000.0 / cfg.beacon_frequency_hz + 1e-9));
  const int r_freq = cfg.rb_pairs_per_subframe / cfg.rb_pairs_per_cam();
  if (r_time < 1) throw ConfigError("cam: beacon period shorter than one subframe");
  if (r_freq < 1)
    throw ConfigError("cam: a CAM needs " + std::to_string(cfg.rb_pairs_per_cam()) +
                      " RB pairs but a subframe has " + std::to_string(cfg.rb_pairs_per_subframe));
  return ResourceGrid::make(r_time, r_freq);
}

namespace {
void check_index(const ResourceGrid& grid, int r) {
  if (r < 1 || r > grid.r_total)
    throw DomainError("resource index " + std::to_string(r) + " outside 1.." + std::to_string(grid.r_total));
}
}  // namespace

int time_slot(const ResourceGrid& grid, int r) {
  check_index(grid, r);
  return (r - 1) % grid.r_time + 1;
}

int freq_slot(const ResourceGrid& grid, int r) {
  check_index(grid, r);
  return (r - 1) / grid.r_time + 1;
}

bool same_subframe(const ResourceGrid& grid, int r_a, int r_b) {
  check_index(grid, r_a);
  check_index(grid, r_b);
  return std::abs(r_a - r_b) % grid.r_time == 0;
}

}  // namespace v2v
