#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "v2v/allocators.hpp"
#include "v2v/link_table.hpp"
#include "v2v/radio.hpp"

namespace v2v {

struct Mode4Config {
  double p_keep = 0.0;
  /// Sensing threshold in dBm (interpreted as an absolute power).
  double i_th_dbm = -110.0;
  double candidate_fraction = 0.2;
  double sensing_window_s = 1.0;
  double reselection_min_s = 0.5;
  double reselection_max_s = 1.5;
  double beacon_period_s = 0.1;

  void validate() const;
  int window_periods() const;
  int min_countdown() const;  // ceil(min / T)
  int max_countdown() const;  // floor(max / T)
};

/// What every vehicle measured on every resource during one beacon period.
/// Rows follow the order of `ids`.
struct SensingReport {
  std::vector<std::uint32_t> ids;
  int r_total = 0;
  std::vector<float> power_mw;       // ids.size() x r_total, own signal excluded
  std::vector<std::uint8_t> busy;    // control information of some user decoded
  std::vector<std::uint8_t> sensed;  // 0 where the vehicle was transmitting in that subframe

  std::size_t index(std::size_t row, int r) const { return row * r_total + (r - 1); }
};

/// Measurements implied by one period's allocation.
SensingReport sense_period(const Scenario& s, const Allocation& a, const LinkTable& links,
                           const ResourceGrid& grid, const RadioConfig& radio);

struct Mode4Vehicle {
  int resource = 0;
  int countdown = 0;
  // Ring buffer of the last W periods: W x R samples with validity flags.
  std::vector<float> samples;
  std::vector<std::uint8_t> valid;
  std::vector<long> last_busy;  // per resource, last period with busy flag
};

struct Mode4State {
  std::unordered_map<std::uint32_t, Mode4Vehicle> vehicles;
  long period = 0;
  int r_total = 0;
  std::uint64_t reselections = 0;
};

/// Average sensed power per resource over the sensing window (index r-1).
std::vector<double> sensed_average(const Mode4Vehicle& v, const Mode4State& state);

/// The candidate set a vehicle would draw from if it reselected now:
/// resources not flagged busy within the window or sensed below I_th, the
/// ceil(fraction * R) least interfered of them (ties broken at random). When
/// fewer legal resources exist the set is topped up with the least interfered
/// remaining ones.
std::vector<int> mode4_candidates(const Mode4Vehicle& v, const Mode4State& state, const ResourceGrid& grid,
                                  const Mode4Config& cfg, Rng& rng);

/// One beacon period of semi-persistent scheduling.
///
/// Ingests `previous` (the measurements of the last period, may be null),
/// gives newcomers a uniform resource and countdown, decrements countdowns
/// and, on expiry, redraws the countdown and reselects with probability
/// 1 - p_keep. Vehicles absent from `s` are dropped from the state.
Allocation mode4_step(Mode4State& state, const Scenario& s, const ResourceGrid& grid, const SensingReport* previous,
                      const Mode4Config& cfg, Rng& rng);

}  // namespace v2v
