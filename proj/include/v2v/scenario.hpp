#pragma once

#include <cstdint>
#include <istream>
#include <vector>

namespace v2v {

struct ScenarioConfig {
  double density = 0.1;        // vehicles per meter
  double road_length = 10000;  // meters
  bool wrap = false;           // circular road
  std::uint64_t seed = 1;

  /// Throws ConfigError on non-finite or non-positive values.
  void validate() const;
};

/// Vehicle positions on a 1-D road, sorted nondecreasing.
///
/// `ids` identifies vehicles across trace snapshots; PPP drops number them
/// 0..N-1 in position order.
struct Scenario {
  std::vector<double> positions;
  std::vector<std::uint32_t> ids;
  double road_length = 0;
  bool wrap = false;

  std::size_t size() const { return positions.size(); }

  /// Distance between two points on this road; min(|dx|, L-|dx|) when wrapping.
  double distance(double a, double b) const;
  double distance_between(std::size_t i, std::size_t j) const {
    return distance(positions[i], positions[j]);
  }
};

Scenario generate_ppp(const ScenarioConfig& cfg);

struct TraceFormat {
  /// Road length attached to every snapshot. Zero means "derive from the
  /// trace": one meter past the largest position seen.
  double road_length = 0;
  bool wrap = false;
};

/// Reads a `time_s,vehicle_id,position_m` CSV trace into one Scenario per
/// distinct timestamp. Throws ParseError (with line number) on malformed
/// records, negative positions, duplicate ids in a snapshot or decreasing
/// timestamps.
std::vector<Scenario> load_trace(std::istream& in, const TraceFormat& format = {});

/// Vehicles per meter.
double empirical_density(const Scenario& s);

/// Sorts positions (stable, so ties keep input order) and permutes ids along.
void sort_scenario(Scenario& s);

}  // namespace v2v
