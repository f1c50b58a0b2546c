#include "v2v/analysis/prp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "v2v/analysis/quadrature.hpp"
#include "v2v/analysis/special.hpp"
#include "v2v/analysis/stable.hpp"
#include "v2v/error.hpp"
#include "v2v/parallel.hpp"

namespace v2v {

std::string to_string(Benchmark b) { return b == Benchmark::rr ? "RR" : "MD"; }

double p_hd_rr(const ResourceGrid& grid) {
  grid.validate();
  return 1.0 / grid.r_time;
}

double log_p_hd_md(double rho, double d_sd, const ResourceGrid& grid) {
  grid.validate();
  if (!(rho > 0) || !(d_sd >= 0)) throw DomainError("p_hd_md: invalid density or distance");
  const double lambda = rho * d_sd;
  const int rt = grid.r_time;
  if (rt == 1) return 0.0;
  if (lambda == 0) return -std::numeric_limits<double>::infinity();
  // Terms rise until the count passes lambda and then fall; stop once past
  // the mode and negligible relative to the largest.
  std::vector<double> logs;
  double peak = -std::numeric_limits<double>::infinity();
  for (long k = 0;; ++k) {
    const double n = (rt - 1) + static_cast<double>(k) * rt;
    const double l = log_poisson_pmf(lambda, n);
    logs.push_back(l);
    peak = std::max(peak, l);
    if (n > lambda && l < peak + std::log(1e-18)) break;
  }
  double sum = 0;
  for (double l : logs) sum += std::exp(l - peak);
  return peak + std::log(sum);
}

double p_hd_md(double rho, double d_sd, const ResourceGrid& grid) { return std::exp(log_p_hd_md(rho, d_sd, grid)); }

double prp(Benchmark algo, const RadioConfig& radio, double rho, const ResourceGrid& grid, double d_sd,
           const AnalysisOptions& opt) {
  radio.validate();
  grid.validate();
  if (!(d_sd > 0)) throw DomainError("prp: distance must be positive");
  if (!(rho > 0)) throw DomainError("prp: density must be positive");

  const double p0 = pr0(radio);
  const double useful = p0 * std::pow(d_sd, -radio.beta);
  const double gm = gamma_min_linear(radio);
  const double pn = noise_mw(radio);

  std::function<double(double)> cdf;
  double p_hd = 0;
  StableParams sp;
  MdParams mp;
  if (algo == Benchmark::rr) {
    sp = rr_stable_params(rho, grid, radio);
    cdf = [&](double y) { return stable_cdf(sp, y); };
    p_hd = p_hd_rr(grid);
  } else {
    mp = MdParams{rho, grid.r_total, radio.beta, p0, d_sd};
    cdf = [&](double y) { return md_interference_cdf(mp, y, opt.md_mode); };
    p_hd = p_hd_md(rho, d_sd, grid);
  }

  const auto& gh = gauss_hermite_64();
  double acc = 0;
  for (std::size_t k = 0; k < gh.nodes.size(); ++k) {
    if (gh.weights[k] < 1e-40) continue;
    const double x_db = std::sqrt(2.0) * radio.shadow_sigma_db * gh.nodes[k];
    const double y = useful * db_to_linear(x_db) / gm - pn;
    if (y <= 0) continue;
    acc += gh.weights[k] * cdf(y);
  }
  return std::clamp((1.0 - p_hd) * acc / std::sqrt(M_PI), 0.0, 1.0);
}

double prp_bin_average(Benchmark algo, const RadioConfig& radio, double rho, const ResourceGrid& grid, double lo,
                       double hi, const AnalysisOptions& opt) {
  if (!(hi > lo) || !(lo >= 0)) throw DomainError("prp_bin_average: invalid bin");
  static const double xs[3] = {-std::sqrt(0.6), 0.0, std::sqrt(0.6)};
  static const double ws[3] = {5.0 / 9, 8.0 / 9, 5.0 / 9};
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  double acc = 0;
  for (int i = 0; i < 3; ++i) acc += ws[i] * prp(algo, radio, rho, grid, mid + half * xs[i], opt);
  return acc / 2;
}

double d09(Benchmark algo, const RadioConfig& radio, double rho, const ResourceGrid& grid,
           const AnalysisOptions& opt) {
  constexpr double kStep = 25, kMax = 1500, kThreshold = 0.9;
  auto above = [&](double d) { return prp(algo, radio, rho, grid, d, opt) > kThreshold; };
  std::vector<double> scan{1.0};
  for (double d = kStep; d <= kMax; d += kStep) scan.push_back(d);
  std::vector<char> ok(scan.size());
  parallel_for(scan.size(), [&](std::size_t i) { ok[i] = above(scan[i]); });
  std::size_t last = scan.size();
  for (std::size_t i = 0; i < scan.size(); ++i)
    if (ok[i]) last = i;
  if (last == scan.size()) return 0.0;
  if (last + 1 == scan.size()) return scan.back();
  double lo = scan[last], hi = scan[last + 1];
  while (hi - lo > 1.0) {
    const double mid = 0.5 * (lo + hi);
    (above(mid) ? lo : hi) = mid;
  }
  return lo;
}

void PrpCurve::validate() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!(points[i].prp >= 0 && points[i].prp <= 1)) throw DomainError("PrpCurve: probability outside [0,1]");
    if (i && !(points[i].d_sd > points[i - 1].d_sd)) throw DomainError("PrpCurve: distances must increase");
  }
}

PrpCurve prp_curve(Benchmark algo, const RadioConfig& radio, double rho, const ResourceGrid& grid,
                   const std::vector<double>& distances, const AnalysisOptions& opt) {
  PrpCurve c;
  c.points.resize(distances.size());
  parallel_for(distances.size(), [&](std::size_t i) {
    c.points[i].d_sd = distances[i];
    c.points[i].prp = prp(algo, radio, rho, grid, distances[i], opt);
  });
  c.validate();
  return c;
}

}  // namespace v2v
