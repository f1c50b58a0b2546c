#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace v2v {

struct MeanCi {
  double mean = 0;
  double half_width = 0;  // NaN with fewer than two samples
  std::size_t n = 0;
  double low() const { return mean - half_width; }
  double high() const { return mean + half_width; }
};

/// Sample mean with a two-sided Student-t interval, n - 1 degrees of freedom.
MeanCi student_t_ci(std::span<const double> samples, double confidence = 0.95);

/// Sup distance between the empirical CDF of `samples` and `cdf`.
template <class Cdf>
double ks_statistic(std::vector<double> samples, Cdf&& cdf);

/// Asymptotic Kolmogorov p-value P(K > sqrt(n) D), with the usual
/// small-sample correction sqrt(n) + 0.12 + 0.11 / sqrt(n).
double ks_pvalue(double d, std::size_t n);

/// Empirical CDF of a sample, evaluated by binary search.
class EmpiricalCdf {
 public:
  EmpiricalCdf() = default;
  explicit EmpiricalCdf(std::vector<double> samples);
  double operator()(double y) const;
  std::size_t size() const { return sorted_.size(); }
  const std::vector<double>& sorted() const { return sorted_; }

 private:
  std::vector<double> sorted_;
};

/// Largest |F_emp - cdf| over the jump points of the empirical CDF (both
/// one-sided limits).
template <class Cdf>
double sup_distance(const EmpiricalCdf& emp, Cdf&& cdf) {
  const auto& s = emp.sorted();
  const double n = static_cast<double>(s.size());
  double d = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i + 1 < s.size() && s[i + 1] == s[i]) continue;
    const double f = cdf(s[i]);
    std::size_t first = i;
    while (first > 0 && s[first - 1] == s[i]) --first;
    d = std::max({d, std::abs((i + 1) / n - f), std::abs(first / n - f)});
  }
  return d;
}

template <class Cdf>
double ks_statistic(std::vector<double> samples, Cdf&& cdf) {
  return sup_distance(EmpiricalCdf(std::move(samples)), cdf);
}

}  // namespace v2v
