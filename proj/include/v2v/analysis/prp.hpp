#pragma once

#include <optional>
#include <string>
#include <vector>

#include "v2v/analysis/md_interference.hpp"
#include "v2v/radio.hpp"
#include "v2v/resources.hpp"

namespace v2v {

enum class Benchmark { rr, md };

std::string to_string(Benchmark b);

struct AnalysisOptions {
  MdMode md_mode = MdMode::approximate;
};

/// Source and destination share a subframe.
double p_hd_rr(const ResourceGrid& grid);
/// MD: the number of vehicles strictly between source and destination is
/// (R_t - 1) + k R_t for some k >= 0.
double p_hd_md(double rho, double d_sd, const ResourceGrid& grid);
double log_p_hd_md(double rho, double d_sd, const ResourceGrid& grid);

/// Probability that the destination at d_sd decodes the source:
/// (1 - P_HD) E_v[F_I(Pr(d) v / gamma_m - P_n)], v log-normal with the
/// configured dB spread, averaged with 64-point Gauss-Hermite.
double prp(Benchmark algo, const RadioConfig& radio, double rho, const ResourceGrid& grid, double d_sd,
           const AnalysisOptions& opt = {});

/// Average of prp over [lo, hi] (3-point Gauss-Legendre), for comparison
/// with distance-binned simulation.
double prp_bin_average(Benchmark algo, const RadioConfig& radio, double rho, const ResourceGrid& grid, double lo,
                       double hi, const AnalysisOptions& opt = {});

/// Largest distance with prp > 0.9: 25 m scan up to 1500 m, then bisection
/// to 1 m. 0 when prp never exceeds 0.9.
double d09(Benchmark algo, const RadioConfig& radio, double rho, const ResourceGrid& grid,
           const AnalysisOptions& opt = {});

struct PrpPoint {
  double d_sd = 0;
  double prp = 0;
  std::optional<double> ci_half_width;
};

struct PrpCurve {
  std::vector<PrpPoint> points;
  /// Throws DomainError unless prp in [0,1] and distances strictly increase.
  void validate() const;
};

/// prp at each distance. Points are computed in parallel and returned in
/// input order.
PrpCurve prp_curve(Benchmark algo, const RadioConfig& radio, double rho, const ResourceGrid& grid,
                   const std::vector<double>& distances, const AnalysisOptions& opt = {});

}  // namespace v2v
