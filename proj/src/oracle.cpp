#include "v2v/oracle.hpp"

#include <cmath>
#include <random>

#include "v2v/error.hpp"

namespace v2v {
namespace {
constexpr std::size_t kMinSamples = 10000;
}

EmpiricalCdf interference_oracle(const RrOracleParams& p, std::size_t samples, Rng& rng) {
  if (samples < kMinSamples) throw DomainError("interference_oracle: at least 1e4 samples required");
  if (!(p.rho_rr >= 0) || !(p.beta > 1) || !(p.pr0 > 0) || !(p.window_m > 0))
    throw DomainError("interference_oracle: invalid parameters");
  std::vector<double> out(samples, 0.0);
  if (p.rho_rr == 0) return EmpiricalCdf(std::move(out));
  std::poisson_distribution<long> count(2 * p.window_m * p.rho_rr);
  std::uniform_real_distribution<double> pos(-p.window_m, p.window_m);
  for (auto& total : out) {
    for (long k = count(rng); k > 0; --k) {
      const double r = std::max(std::fabs(pos(rng)), 1e-9);
      total += p.pr0 * std::pow(r, -p.beta);
    }
  }
  return EmpiricalCdf(std::move(out));
}

EmpiricalCdf interference_oracle(const MdParams& p, std::size_t samples, Rng& rng) {
  if (samples < kMinSamples) throw DomainError("interference_oracle: at least 1e4 samples required");
  p.validate();
  std::gamma_distribution<double> gap(p.r_total, 1.0 / p.rho);
  const double d = p.d_sd;
  std::vector<double> out(samples);
  for (auto& total : out) {
    const double toward = gap(rng);
    double near_side, far_side;
    if (toward < d) {
      near_side = d - toward;
      far_side = toward + gap(rng) - d;
    } else {
      near_side = d + gap(rng);
      far_side = toward - d;
    }
    total = p.power_at(std::max(near_side, 1e-9)) + p.power_at(std::max(far_side, 1e-9));
  }
  return EmpiricalCdf(std::move(out));
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0) || !(hi > lo) || n < 2) throw DomainError("log_grid: need 0 < lo < hi and n >= 2");
  std::vector<double> g(n);
  const double a = std::log(lo), step = (std::log(hi) - a) / (n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = std::exp(a + step * i);
  g.back() = hi;
  return g;
}

}  // namespace v2v
