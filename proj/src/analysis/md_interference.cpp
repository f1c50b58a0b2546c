#include "v2v/analysis/md_interference.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "v2v/analysis/quadrature.hpp"
#include "v2v/analysis/special.hpp"
#include "v2v/error.hpp"

namespace v2v {

void MdParams::validate() const {
  if (!(rho > 0) || r_total < 1 || !(beta > 1) || !(pr0 > 0) || !(d_sd > 0))
    throw DomainError("MdParams: all parameters must be positive (beta > 1)");
}

double MdParams::power_at(double x) const { return pr0 * std::pow(x, -beta); }
double MdParams::distance_for(double w) const { return std::pow(w / pr0, -1.0 / beta); }
double MdParams::h_prime(double w) const { return -distance_for(w) / (beta * w); }

bool md_needs_full(const MdParams& p, double y) {
  return nth_neighbor_cdf(p.r_total, p.rho, p.d_sd) > 0.01 || y >= p.power_at(p.d_sd);
}

namespace {

QuadOptions md_quad() {
  QuadOptions o;
  o.rel_tol = 1e-8;
  o.abs_tol = 1e-13;
  return o;
}

// int_{x > d + r(y)} A(y - g(x - d)) B(x) dx where B is the gamma(n, rho)
// density restricted to x > d and divided by `norm`.
double convolve(const MdParams& p, double y, const std::function<double(double)>& A, int n, double norm) {
  if (!(norm > 0)) return 0.0;
  const double d = p.d_sd;
  const double lo = d + p.distance_for(y);
  const double sn = std::sqrt(static_cast<double>(n));
  const double hi = (n + 15 * sn + 10) / p.rho;
  if (lo >= hi) return 0.0;
  std::vector<double> breaks{(n - 1) / p.rho};
  // A switches at w = g(d), where the near-side interferer reaches the destination
  const double g_d = p.power_at(d);
  if (y > g_d) breaks.push_back(d + p.distance_for(y - g_d));
  auto integrand = [&](double x) {
    if (x <= lo) return 0.0;
    const double a = A(y - p.power_at(x - d));
    if (a == 0) return 0.0;
    return a * std::exp(log_nth_neighbor_pdf(n, p.rho, x) - std::log(norm));
  };
  return integrate(integrand, lo, hi, breaks, md_quad());
}

}  // namespace

double md_interference_cdf(const MdParams& p, double y, MdMode mode) {
  p.validate();
  if (std::isnan(y)) throw DomainError("md_interference_cdf: NaN argument");
  if (y <= 0) return 0.0;
  if (std::isinf(y)) return 1.0;
  const int R = p.r_total;
  const double d = p.d_sd, rho = p.rho;
  const double g_d = p.power_at(d);

  // Source-side interferer behind the source: g(x' + d) <= w.
  auto a_behind = [&](double w) {
    if (w <= 0) return 0.0;
    if (w >= g_d) return 1.0;
    return gammainc_upper_reg(R, rho * (p.distance_for(w) - d));
  };

  if (mode == MdMode::approximate && !md_needs_full(p, y))
    return std::clamp(convolve(p, y, a_behind, R, 1.0), 0.0, 1.0);

  const double log_f = log_gammainc_lower_reg(R, rho * d);  // interferer between source and destination
  const double f = std::exp(log_f);
  const double fbar = gammainc_upper_reg(R, rho * d);

  // Source-side interferer between source and destination, conditioned on
  // being there: g(d - x') <= w.
  auto a_between = [&](double w) {
    if (!(w > g_d)) return 0.0;
    const double lp = log_gammainc_lower_reg(R, rho * (d - p.distance_for(w))) - log_f;
    return lp < -745 ? 0.0 : std::exp(std::min(lp, 0.0));
  };

  const double q_r = gammainc_upper_reg(R, rho * d);
  const double q_2r = gammainc_upper_reg(2 * R, rho * d);
  double total = 0;
  const double w11 = fbar * fbar, w12 = fbar * f, w21 = f * fbar, w22 = f * f;
  if (w11 > 0) total += w11 * convolve(p, y, a_behind, R, q_r);
  if (w12 > 1e-300) total += w12 * convolve(p, y, a_behind, 2 * R, q_2r);
  if (w21 > 1e-300) total += w21 * convolve(p, y, a_between, R, q_r);
  if (w22 > 1e-300) total += w22 * convolve(p, y, a_between, 2 * R, q_2r);
  return std::clamp(total, 0.0, 1.0);
}

}  // namespace v2v
