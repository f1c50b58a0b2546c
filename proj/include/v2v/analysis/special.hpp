#pragma once

namespace v2v {

// Regularized incomplete gamma functions P(s,x) and Q(s,x) = 1 - P(s,x).
// Series for x < s + 1, Lentz continued fraction otherwise; the prefactor
// x^s e^-x / Gamma(s) is assembled in log space so s in the hundreds is safe.
// DomainError for s <= 0 or x < 0.
double gammainc_lower_reg(double s, double x);
double gammainc_upper_reg(double s, double x);
double log_gammainc_lower_reg(double s, double x);
double log_gammainc_upper_reg(double s, double x);

// Distance from a point to its n-th neighbour on one side of a 1-D PPP of
// density rho: gamma(n, rho).
double nth_neighbor_cdf(int n, double rho, double delta);
double nth_neighbor_ccdf(int n, double rho, double delta);
double nth_neighbor_pdf(int n, double rho, double delta);
double log_nth_neighbor_pdf(int n, double rho, double delta);

/// log of lambda^k e^-lambda / k!; -inf where the mass is zero.
double log_poisson_pmf(double lambda, double k);

}  // namespace v2v
