#pragma once

#include <cstdint>
#include <unordered_map>

namespace v2v {

/// Log-normal shadowing per link, correlated over link displacement.
///
/// Each unordered link (a, b) carries a Gaussian dB value that evolves as a
/// first-order autoregression: after the link has been displaced by `dx`
/// meters since it was last sampled,
///     s <- rho * s + sqrt(1 - rho^2) * sigma * w,   rho = exp(-dx / d_corr).
/// The displacement of a link is the sum of the distances moved by both ends,
/// supplied by the caller as the sum of per-vehicle odometers. Fresh links
/// start from the stationary N(0, sigma^2) law, so every sample has the
/// configured marginal. Innovations are counter-based, so values depend only
/// on (seed, link, update count).
class ShadowField {
 public:
  ShadowField(double sigma_db, double decorr_distance_m, std::uint64_t seed);

  /// Shadowing of link (a, b) in dB at the given odometer sum.
  double sample_db(std::uint32_t a, std::uint32_t b, double odometer_sum);

  /// The value a fresh link starts from, without tracking it. Static
  /// snapshots need nothing else.
  double initial_db(std::uint32_t a, std::uint32_t b) const;

  double sigma_db() const { return sigma_db_; }
  std::size_t tracked_links() const { return links_.size(); }

  /// Drops links not refreshed since the given epoch.
  void forget_before(std::uint64_t epoch);
  void set_epoch(std::uint64_t epoch) { epoch_ = epoch; }

 private:
  struct Link {
    double db;
    double odometer;
    std::uint32_t updates;
    std::uint64_t epoch;
  };

  double sigma_db_;
  double decorr_;
  std::uint64_t seed_;
  std::uint64_t epoch_ = 0;
  std::unordered_map<std::uint64_t, Link> links_;
};

}  // namespace v2v
