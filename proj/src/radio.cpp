#include "v2v/radio.hpp"

#include <cmath>

#include "v2v/error.hpp"

namespace v2v {

void RadioConfig::validate() const {
  for (double v : {pt_dbm, gt_db, gr_db, l0_db, beta, noise_power_dbm, gamma_min_db, shadow_sigma_db,
                   decorr_distance_m})
    if (!std::isfinite(v)) throw ConfigError("radio: non-finite parameter");
  if (beta <= 1) throw ConfigError("radio: beta must exceed 1");
  if (shadow_sigma_db < 0) throw ConfigError("radio: shadow_sigma_db must be >= 0");
  if (decorr_distance_m < 0) throw ConfigError("radio: decorr_distance_m must be >= 0");
  if (dual_slope && (dual_slope->break_distance_m <= 0 || dual_slope->near_exponent <= 0))
    throw ConfigError("radio: invalid dual-slope parameters");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db) {
  if (!(bandwidth_hz > 0)) throw DomainError("thermal_noise_dbm: bandwidth must be positive");
  return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

double pr0(const RadioConfig& cfg) { return db_to_linear(cfg.pt_dbm + cfg.gt_db + cfg.gr_db - cfg.l0_db); }

double rx_power(const RadioConfig& cfg, double distance_m, double shadow_linear) {
  if (!(distance_m > 0)) throw DomainError("rx_power: distance must be positive");
  const double p0 = pr0(cfg) * shadow_linear;
  if (cfg.dual_slope && distance_m < cfg.dual_slope->break_distance_m) {
    const double bp = cfg.dual_slope->break_distance_m;
    return p0 * std::pow(bp, -cfg.beta) * std::pow(distance_m / bp, -cfg.dual_slope->near_exponent);
  }
  return p0 * std::pow(distance_m, -cfg.beta);
}

double noise_mw(const RadioConfig& cfg) { return db_to_linear(cfg.noise_power_dbm); }
double gamma_min_linear(const RadioConfig& cfg) { return db_to_linear(cfg.gamma_min_db); }

double sinr(const RadioConfig& cfg, double rx_power_mw, double interference_mw) {
  return rx_power_mw / (noise_mw(cfg) + interference_mw);
}

bool decode_ok(const RadioConfig& cfg, double gamma) { return gamma > gamma_min_linear(cfg); }

}  // namespace v2v
