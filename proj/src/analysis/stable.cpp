#include "v2v/analysis/stable.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <vector>

#include "v2v/analysis/quadrature.hpp"
#include "v2v/error.hpp"

namespace v2v {

StableParams stable_params_for_ppp(double rho_rr, double beta, double pr0) {
  if (!(beta > 1)) throw DomainError("stable interference: path-loss exponent must exceed 1");
  if (!(rho_rr >= 0) || !(pr0 > 0)) throw DomainError("stable interference: invalid density or power");
  StableParams p;
  p.a = 1.0 / beta;
  p.c = pr0 * std::pow(2.0 * rho_rr * std::tgamma((beta - 1.0) / beta) * std::cos(M_PI / (2.0 * beta)), beta);
  return p;
}

StableParams rr_stable_params(double rho, const ResourceGrid& grid, const RadioConfig& radio) {
  if (!(rho > 0)) throw DomainError("rr_stable_params: density must be positive");
  grid.validate();
  return stable_params_for_ppp(rho / grid.r_total, radio.beta, pr0(radio));
}

namespace {

constexpr double kUMax = 45.0;  // e^-45 ~ 3e-20
constexpr int kMaxZeros = 60;

// Last even-column entry of the epsilon table built from partial sums.
double wynn_epsilon(const std::vector<double>& s) {
  std::vector<double> prev(s.size() + 1, 0.0), cur(s.begin(), s.end());
  double best = s.back();
  for (int col = 1; cur.size() > 1; ++col) {
    std::vector<double> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const double diff = cur[i + 1] - cur[i];
      if (diff == 0) return cur[i + 1];
      next[i] = prev[i + 1] + 1.0 / diff;
    }
    prev = std::move(cur);
    cur = std::move(next);
    if (col % 2 == 0 && std::isfinite(cur.back())) best = cur.back();
  }
  return best;
}

}  // namespace

double stable_cdf(const StableParams& p, double y) {
  if (!(p.a > 0 && p.a < 1) || p.b != 1.0 || p.mu != 0.0)
    throw DomainError("stable_cdf: only 0 < a < 1, b = 1, mu = 0 is supported");
  if (!(p.c >= 0)) throw DomainError("stable_cdf: negative scale");
  if (std::isnan(y)) throw DomainError("stable_cdf: NaN argument");
  if (y <= 0) return 0.0;
  if (p.c == 0 || std::isinf(y)) return 1.0;

  const double a = p.a, pw = 1.0 / a, T = std::tan(M_PI * a / 2), x = y / p.c;
  auto psi = [&](double u) { return u * T - std::pow(u, pw) * x; };
  auto f = [&](double u) { return u > 0 ? std::exp(-u) * std::sin(psi(u)) / u : T; };
  QuadOptions opt;
  opt.rel_tol = 1e-10;
  opt.abs_tol = 1e-11;

  auto finish = [&](double integral) { return std::clamp(0.5 - integral / (a * M_PI), 0.0, 1.0); };

  const double ustar = std::pow(T / (pw * x), 1.0 / (pw - 1.0));
  if (!(ustar < kUMax)) return finish(integrate(f, 0.0, kUMax, opt));

  double total = integrate(f, 0.0, ustar, opt);
  std::vector<double> sums{total};
  double lo = ustar;
  double m = std::floor(psi(ustar) / M_PI);
  boost::math::tools::eps_tolerance<double> tol(50);
  for (int k = 0; k < kMaxZeros; ++k, m -= 1) {
    const double target = m * M_PI;
    if (!(psi(lo) > target)) continue;  // the maximum sits on a zero
    double hi = std::max(2 * lo, lo + 1);
    while (psi(hi) > target) hi *= 2;
    std::uintmax_t iters = 200;
    const auto br = boost::math::tools::toms748_solve([&](double u) { return psi(u) - target; }, lo, hi, tol, iters);
    const double z = 0.5 * (br.first + br.second);
    // One half-wave per segment: a fixed high-order rule is exact to rounding.
    total += boost::math::quadrature::gauss<double, 30>::integrate(f, lo, z);
    sums.push_back(total);
    lo = z;
    if (z > kUMax) return finish(total);
  }
  const std::size_t keep = std::min<std::size_t>(sums.size(), 40);
  return finish(wynn_epsilon(std::vector<double>(sums.end() - keep, sums.end())));
}

double levy_cdf_rr(double rho_rr, double pr0, double y) {
  if (!(y > 0)) return 0.0;
  return std::erfc(rho_rr * std::sqrt(M_PI) * std::sqrt(pr0 / y));
}

}  // namespace v2v
