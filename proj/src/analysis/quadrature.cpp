#include "v2v/analysis/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <queue>
#include <sstream>

#include "v2v/error.hpp"

namespace v2v {

QuadratureRule gauss_hermite(int n) {
  if (n < 1) throw DomainError("gauss_hermite: n must be positive");
  // Newton on the orthonormal recurrence, roots from the largest down.
  const double pim4 = std::pow(M_PI, -0.25);
  QuadratureRule rule;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int m = (n + 1) / 2;
  double z = 0;
  for (int i = 0; i < m; ++i) {
    if (i == 0)
      z = std::sqrt(2.0 * n + 1) - 1.85575 * std::pow(2.0 * n + 1, -0.16667);
    else if (i == 1)
      z -= 1.14 * std::pow(n, 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * rule.nodes[n - 1];
    else if (i == 3)
      z = 1.91 * z - 0.91 * rule.nodes[n - 2];
    else
      z = 2.0 * z - rule.nodes[n - i + 1];
    double pp = 0;
    int it = 0;
    for (; it < 100; ++it) {
      double p1 = pim4, p2 = 0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::fabs(z - z1) <= 1e-15 * std::max(1.0, std::fabs(z))) break;
    }
    if (it == 100) throw NumericError("gauss_hermite: Newton iteration did not converge");
    rule.nodes[n - 1 - i] = z;
    rule.nodes[i] = -z;
    rule.weights[n - 1 - i] = rule.weights[i] = 2.0 / (pp * pp);
  }
  return rule;
}

const QuadratureRule& gauss_hermite_64() {
  static const QuadratureRule rule = gauss_hermite(64);
  return rule;
}

namespace {

struct Piece {
  double a = 0, b = 0, value = 0, error = 0, l1 = 0;
  bool operator<(const Piece& o) const { return error < o.error; }
};

Piece gk15(const std::function<double(double)>& f, double a, double b) {
  Piece p{a, b};
  p.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 0, 0.0, &p.error, &p.l1);
  // Boost 1.74 reports the non-adaptive error on the reference interval
  // [-1, 1]; value and L1 are already scaled.
  p.error *= 0.5 * (b - a);
  return p;
}

double adaptive(const std::function<double(double)>& f, const std::vector<double>& points, const QuadOptions& opt) {
  std::priority_queue<Piece> queue;
  double value = 0, error = 0, l1 = 0;
  auto push = [&](Piece p) {
    value += p.value;
    error += p.error;
    l1 += p.l1;
    queue.push(p);
  };
  for (std::size_t i = 0; i + 1 < points.size(); ++i) push(gk15(f, points[i], points[i + 1]));
  // running sums drift after many updates; recompute when checking
  auto resum = [&] {
    auto copy = queue;
    value = error = l1 = 0;
    for (; !copy.empty(); copy.pop()) {
      value += copy.top().value;
      error += copy.top().error;
      l1 += copy.top().l1;
    }
  };
  while (std::isfinite(value) && error > std::max(opt.rel_tol * l1, opt.abs_tol)) {
    if (queue.size() >= opt.max_intervals) {
      resum();
      if (!(error > std::max(opt.rel_tol * l1, opt.abs_tol))) break;
      const Piece& w = queue.top();
      std::ostringstream os;
      os.precision(17);
      os << "quadrature did not converge on [" << points.front() << ", " << points.back() << "]: value " << value
         << ", error estimate " << error << ", worst interval [" << w.a << ", " << w.b << "]";
      throw NumericError(os.str());
    }
    Piece worst = queue.top();
    queue.pop();
    value -= worst.value;
    error -= worst.error;
    l1 -= worst.l1;
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // cannot split further; keep what we have
      push(worst);
      resum();
      break;
    }
    push(gk15(f, worst.a, mid));
    push(gk15(f, mid, worst.b));
  }
  resum();
  if (!std::isfinite(value)) {
    std::ostringstream os;
    os.precision(17);
    os << "quadrature on [" << points.front() << ", " << points.back() << "] produced a non-finite value";
    throw NumericError(os.str());
  }
  return value;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, const QuadOptions& opt) {
  if (a == b) return 0.0;
  return adaptive(f, {a, b}, opt);
}

double integrate(const std::function<double(double)>& f, double a, double b, std::vector<double> breaks,
                 const QuadOptions& opt) {
  if (a == b) return 0.0;
  std::erase_if(breaks, [&](double x) { return !(x > a && x < b); });
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  breaks.insert(breaks.begin(), a);
  breaks.push_back(b);
  return adaptive(f, breaks, opt);
}

}  // namespace v2v
