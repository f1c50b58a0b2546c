#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "v2v/allocators.hpp"
#include "v2v/analysis/prp.hpp"
#include "v2v/mode4.hpp"
#include "v2v/radio.hpp"
#include "v2v/resources.hpp"
#include "v2v/scenario.hpp"
#include "v2v/simulator.hpp"

namespace v2v {

/// Bandwidth the thermal noise is integrated over: the resource blocks of
/// one CAM, or the whole channel.
enum class NoiseBandwidth { occupied, channel };

/// Parameter sweeps of the experiments.
struct SweepConfig {
  std::vector<double> distances;      // prp-vs-distance, analysis points
  std::vector<double> densities;      // prp-vs-density, d09-vs-density
  std::vector<double> cam_frequencies;  // prp-vs-R
  double density_distance_m = 120;    // distance of prp-vs-density
  double r_distance_m = 300;          // distance of prp-vs-R
  bool simulate = true;               // add simulated series

  SweepConfig();
};

struct Config {
  RadioConfig radio;
  NoiseBandwidth noise_bandwidth = NoiseBandwidth::occupied;
  double channel_bandwidth_hz = 10e6;
  double noise_figure_db = 9.0;
  bool noise_power_explicit = false;  // radio.noise_power_dbm set by hand

  ScenarioConfig scenario;
  CamConfig cam;
  SimConfig sim;
  Mode4Config mode4;
  CrrConfig crr;
  AnalysisOptions analysis;
  SweepConfig sweep;

  /// Recomputes derived values (noise power, Mode 4 period) and validates.
  void resolve();
  ResourceGrid grid() const { return grid_from_cam(cam); }
  SimInputs inputs() const;
};

/// INI-style file: `key = value` lines under `[section]` headers, `#` or
/// `;` comments. Unknown sections or keys, malformed numbers and missing
/// `=` are ParseErrors naming the key and line. Keys left out keep their
/// defaults. The result is resolved.
Config parse_config(std::istream& in);
Config load_config(const std::string& path);

/// Writes every setting in the format parse_config reads.
void write_config(std::ostream& out, const Config& cfg);

/// "a:b:step" (inclusive) or a comma-separated list.
std::vector<double> parse_number_list(const std::string& text);

}  // namespace v2v
