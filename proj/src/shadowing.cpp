#include "v2v/shadowing.hpp"

#include <algorithm>
#include <cmath>

#include "v2v/error.hpp"
#include "v2v/rng.hpp"

namespace v2v {

ShadowField::ShadowField(double sigma_db, double decorr_distance_m, std::uint64_t seed)
    : sigma_db_(sigma_db), decorr_(decorr_distance_m), seed_(seed) {
  if (!(sigma_db >= 0) || !(decorr_distance_m >= 0)) throw ConfigError("shadowing: invalid parameters");
}

double ShadowField::sample_db(std::uint32_t a, std::uint32_t b, double odometer_sum) {
  if (sigma_db_ == 0) return 0.0;
  const auto lo = std::min(a, b);
  const auto hi = std::max(a, b);
  const std::uint64_t key = (static_cast<std::uint64_t>(lo) << 32) | hi;

  auto [it, fresh] = links_.try_emplace(key);
  Link& link = it->second;
  if (fresh) {
    link = {sigma_db_ * counter_normal(seed_, lo, hi, 0), odometer_sum, 0, epoch_};
    return link.db;
  }
  link.epoch = epoch_;
  const double moved = std::abs(odometer_sum - link.odometer);
  if (moved == 0) return link.db;
  const double rho = decorr_ > 0 ? std::exp(-moved / decorr_) : 0.0;
  ++link.updates;
  const double w = counter_normal(seed_, lo, hi, link.updates);
  link.db = rho * link.db + std::sqrt(1.0 - rho * rho) * sigma_db_ * w;
  link.odometer = odometer_sum;
  return link.db;
}

double ShadowField::initial_db(std::uint32_t a, std::uint32_t b) const {
  if (sigma_db_ == 0) return 0.0;
  return sigma_db_ * counter_normal(seed_, std::min(a, b), std::max(a, b), 0);
}

void ShadowField::forget_before(std::uint64_t epoch) {
  std::erase_if(links_, [&](const auto& kv) { return kv.second.epoch < epoch; });
}

}  // namespace v2v
