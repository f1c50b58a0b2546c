#include "v2v/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <limits>
#include <numeric>

#include "v2v/error.hpp"

namespace v2v {

MeanCi student_t_ci(std::span<const double> samples, double confidence) {
  if (!(confidence > 0 && confidence < 1)) throw DomainError("student_t_ci: confidence must be in (0,1)");
  MeanCi ci;
  ci.n = samples.size();
  if (ci.n == 0) throw DomainError("student_t_ci: no samples");
  ci.mean = std::accumulate(samples.begin(), samples.end(), 0.0) / ci.n;
  if (ci.n < 2) {
    ci.half_width = std::numeric_limits<double>::quiet_NaN();
    return ci;
  }
  double ss = 0;
  for (double x : samples) ss += (x - ci.mean) * (x - ci.mean);
  const double sd = std::sqrt(ss / (ci.n - 1));
  boost::math::students_t dist(static_cast<double>(ci.n - 1));
  const double t = boost::math::quantile(boost::math::complement(dist, (1 - confidence) / 2));
  ci.half_width = t * sd / std::sqrt(static_cast<double>(ci.n));
  return ci;
}

double ks_pvalue(double d, std::size_t n) {
  if (n == 0) throw DomainError("ks_pvalue: no samples");
  const double sn = std::sqrt(static_cast<double>(n));
  const double lambda = (sn + 0.12 + 0.11 / sn) * d;
  if (lambda < 0.2) return 1.0;
  // Q_KS(lambda) = 2 sum_{k>=1} (-1)^(k-1) exp(-2 k^2 lambda^2)
  double sum = 0, sign = 1;
  for (int k = 1; k <= 200; ++k) {
    const double term = sign * std::exp(-2.0 * k * k * lambda * lambda);
    sum += term;
    if (std::fabs(term) < 1e-16 * std::fabs(sum)) break;
    sign = -sign;
  }
  return std::clamp(2 * sum, 0.0, 1.0);
}

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : sorted_(std::move(samples)) {
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCdf::operator()(double y) const {
  if (sorted_.empty()) return 0.0;
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), y);
  return static_cast<double>(it - sorted_.begin()) / sorted_.size();
}

}  // namespace v2v
