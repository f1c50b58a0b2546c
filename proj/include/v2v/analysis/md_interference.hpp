#pragma once

namespace v2v {

/// Geometry of MD interference. Co-resource users sit every R vehicles, so
/// the nearest one on each side of the source is the R-th neighbour.
struct MdParams {
  double rho = 0.1;
  int r_total = 100;
  double beta = 4.0;
  double pr0 = 1.0;  // mW at 1 m
  double d_sd = 120.0;

  void validate() const;

  /// Power received from distance x: pr0 x^-beta.
  double power_at(double x) const;
  /// Distance at which power w is received: (w / pr0)^(-1/beta).
  double distance_for(double w) const;
  /// h(w, b) = (w / pr0)^(-1/beta) + b and its derivative in w.
  double h(double w, double b) const { return distance_for(w) + b; }
  double h_prime(double w) const;
};

enum class MdMode { approximate, full };

/// True when the single-term approximation is not trusted at y: an
/// interferer falls between source and destination with probability above
/// 1%, or y reaches the power the nearest such interferer would deliver.
bool md_needs_full(const MdParams& p, double y);

/// CDF of the interference from the nearest co-resource user on each side.
///
/// Approximate: both interferers lie beyond the source/destination pair,
///   F(y) = int_{x > d + r(y)} Q(R, rho (r(y - g(x - d)) - d)) f_R(x) dx,
/// x being the distance from the source to the interferer beyond the
/// destination. Full: the four combinations of "R-th neighbour before or
/// beyond the destination" on the two sides, weighted by F_R(d) and its
/// complement. Approximate mode falls back to full where md_needs_full.
double md_interference_cdf(const MdParams& p, double y, MdMode mode = MdMode::approximate);

}  // namespace v2v
