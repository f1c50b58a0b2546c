#include "v2v/analysis/special.hpp"

#include <cmath>
#include <limits>

#include "v2v/error.hpp"

namespace v2v {
namespace {

constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 100000;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check(double s, double x) {
  if (!(s > 0) || !std::isfinite(s)) throw DomainError("incomplete gamma: shape must be positive");
  if (!(x >= 0)) throw DomainError("incomplete gamma: argument must be nonnegative");
}

// log P(s,x), valid for x < s + 1.
double log_series(double s, double x) {
  double term = 1.0 / s, sum = term;
  for (int n = 1; n < kMaxIter; ++n) {
    term *= x / (s + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * kEps) return s * std::log(x) - x - std::lgamma(s) + std::log(sum);
  }
  throw NumericError("incomplete gamma: series did not converge");
}

// log Q(s,x), valid for x >= s + 1. Modified Lentz.
double log_cf(double s, double x) {
  double b = x + 1.0 - s, c = 1.0 / kTiny, d = 1.0 / b, h = d;
  for (int i = 1; i < kMaxIter; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return s * std::log(x) - x - std::lgamma(s) + std::log(h);
  }
  throw NumericError("incomplete gamma: continued fraction did not converge");
}

}  // namespace

double log_gammainc_lower_reg(double s, double x) {
  check(s, x);
  if (x == 0) return kNegInf;
  if (std::isinf(x)) return 0.0;
  if (x < s + 1.0) return log_series(s, x);
  return std::log1p(-std::exp(log_cf(s, x)));
}

double log_gammainc_upper_reg(double s, double x) {
  check(s, x);
  if (x == 0) return 0.0;
  if (std::isinf(x)) return kNegInf;
  if (x < s + 1.0) return std::log1p(-std::exp(log_series(s, x)));
  return log_cf(s, x);
}

double gammainc_lower_reg(double s, double x) { return std::exp(log_gammainc_lower_reg(s, x)); }
double gammainc_upper_reg(double s, double x) { return std::exp(log_gammainc_upper_reg(s, x)); }

namespace {
void check_neighbor(int n, double rho, double delta) {
  if (n < 1) throw DomainError("nth neighbour: n must be >= 1");
  if (!(rho > 0)) throw DomainError("nth neighbour: density must be positive");
  if (!(delta >= 0)) throw DomainError("nth neighbour: distance must be nonnegative");
}
}  // namespace

double nth_neighbor_cdf(int n, double rho, double delta) {
  check_neighbor(n, rho, delta);
  return gammainc_lower_reg(n, rho * delta);
}

double nth_neighbor_ccdf(int n, double rho, double delta) {
  check_neighbor(n, rho, delta);
  return gammainc_upper_reg(n, rho * delta);
}

double log_nth_neighbor_pdf(int n, double rho, double delta) {
  check_neighbor(n, rho, delta);
  if (delta == 0) return n == 1 ? std::log(rho) : kNegInf;
  return n * std::log(rho) + (n - 1) * std::log(delta) - rho * delta - std::lgamma(n);
}

double nth_neighbor_pdf(int n, double rho, double delta) { return std::exp(log_nth_neighbor_pdf(n, rho, delta)); }

double log_poisson_pmf(double lambda, double k) {
  if (!(lambda >= 0) || !(k >= 0)) throw DomainError("poisson: negative argument");
  if (lambda == 0) return k == 0 ? 0.0 : kNegInf;
  return k * std::log(lambda) - lambda - std::lgamma(k + 1);
}

}  // namespace v2v
