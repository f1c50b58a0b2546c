#pragma once

#include <optional>

namespace v2v {

/// Near-range segment of a dual-slope path loss. Below `break_distance_m`
/// the received power follows `near_exponent`, matched to the far-range
/// law at the breakpoint.
struct DualSlope {
  double break_distance_m = 20.0;
  double near_exponent = 2.27;
};

/// Link budget. Powers in dBm, gains and losses in dB.
struct RadioConfig {
  double pt_dbm = 23.0;
  double gt_db = 3.0;
  double gr_db = 3.0;
  double l0_db = 20.06;  // path loss at 1 m
  double beta = 4.0;     // path-loss exponent
  double noise_power_dbm = -97.1324857785;
  double gamma_min_db = 2.8;
  double shadow_sigma_db = 3.0;
  double decorr_distance_m = 25.0;
  std::optional<DualSlope> dual_slope;  // simulation only

  void validate() const;
};

inline constexpr double kResourceBlockHz = 180e3;

double db_to_linear(double db);
double linear_to_db(double linear);

/// Thermal noise power kTB + NF in dBm (-174 dBm/Hz at 290 K).
double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db);

/// Received power at 1 m, mW: Pt*Gt*Gr/L0.
double pr0(const RadioConfig& cfg);

/// Received power in mW at `distance_m` with linear shadowing factor.
double rx_power(const RadioConfig& cfg, double distance_m, double shadow_linear = 1.0);

double noise_mw(const RadioConfig& cfg);
double gamma_min_linear(const RadioConfig& cfg);

double sinr(const RadioConfig& cfg, double rx_power_mw, double interference_mw);

/// Strictly greater than the threshold.
bool decode_ok(const RadioConfig& cfg, double gamma);

}  // namespace v2v
