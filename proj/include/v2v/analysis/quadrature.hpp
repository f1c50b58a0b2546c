#pragma once

#include <functional>
#include <vector>

namespace v2v {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Hermite rule for weight exp(-x^2). Nodes ascending.
QuadratureRule gauss_hermite(int n);

/// Cached 64-point rule.
const QuadratureRule& gauss_hermite_64();

struct QuadOptions {
  double rel_tol = 1e-8;
  double abs_tol = 1e-15;
  unsigned max_intervals = 2000;
};

/// Globally adaptive Gauss-Kronrod (7/15 points) on [a, b]: the interval
/// with the largest error estimate is bisected until the summed estimate is
/// below max(rel_tol * int |f|, abs_tol). Throws NumericError with the
/// interval and error estimate when max_intervals is reached first.
double integrate(const std::function<double(double)>& f, double a, double b, const QuadOptions& opt = {});

/// Same, starting from the partition at the interior points in `breaks`
/// (ignored outside (a, b)).
double integrate(const std::function<double(double)>& f, double a, double b, std::vector<double> breaks,
                 const QuadOptions& opt = {});

}  // namespace v2v
