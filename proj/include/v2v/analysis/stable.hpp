#pragma once

#include "v2v/radio.hpp"
#include "v2v/resources.hpp"

namespace v2v {

/// Totally skewed stable law in the S1 parameterization, characteristic
/// function exp(-c^a |t|^a (1 - i b sign(t) tan(pi a / 2)) + i mu t).
struct StableParams {
  double a = 0.25;
  double b = 1.0;
  double c = 0.0;
  double mu = 0.0;
};

/// Aggregate interference of a 1-D PPP of co-resource interferers with
/// density rho_rr, received power pr0 * r^-beta.
StableParams stable_params_for_ppp(double rho_rr, double beta, double pr0);

/// RR thins the vehicles to density rho / R on every resource.
StableParams rr_stable_params(double rho, const ResourceGrid& grid, const RadioConfig& radio);

/// CDF of the stable law by numerical inversion of its characteristic
/// function. Requires 0 < a < 1, b = 1, mu = 0.
///
/// With u = t^a the inversion integral becomes
///   F(x) = 1/2 - 1/(a pi) int_0^inf e^-u sin(u T - u^(1/a) x) / u du,
/// T = tan(pi a / 2), x = y / c. The phase rises to its maximum at u* and
/// then falls without bound, so [0, u*] is integrated adaptively and the
/// tail is cut at the zeros of the sine; the resulting alternating partial
/// sums are extrapolated with Wynn's epsilon algorithm.
double stable_cdf(const StableParams& p, double y);

/// Closed form for beta = 2: erfc(rho_rr Gamma(1/2) sqrt(pr0 / y)); 0 for y <= 0.
double levy_cdf_rr(double rho_rr, double pr0, double y);

}  // namespace v2v
