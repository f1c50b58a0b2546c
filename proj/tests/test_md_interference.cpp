#include <doctest.h>

#include <cmath>
#include <random>

#include "v2v/analysis/md_interference.hpp"
#include "v2v/analysis/special.hpp"
#include "v2v/error.hpp"
#include "v2v/oracle.hpp"
#include "v2v/radio.hpp"

using namespace v2v;

namespace {

MdParams defaults(double d, int r = 100) {
  RadioConfig radio;
  return MdParams{0.1, r, radio.beta, pr0(radio), d};
}

// Left and right interferers drawn independently, each from the mixture of
// its two cases: the structure of the complete expression, with the gamma
// distances conditioned on the side of the destination they fall on.
EmpiricalCdf independent_mixture_oracle(const MdParams& p, std::size_t samples, std::uint64_t seed) {
  Rng rng(seed);
  std::gamma_distribution<double> g1(p.r_total, 1 / p.rho), g2(2 * p.r_total, 1 / p.rho);
  std::uniform_real_distribution<double> u(0, 1);
  const double f = nth_neighbor_cdf(p.r_total, p.rho, p.d_sd);
  const double d = p.d_sd;
  auto draw = [&](auto& g, bool below) {
    for (;;) {
      double x = g(rng);
      if ((x < d) == below) return x;
    }
  };
  std::vector<double> out(samples);
  for (auto& y : out) {
    double left = u(rng) < f ? d - draw(g1, true) : d + g1(rng);
    double right = (u(rng) < f ? draw(g2, false) : draw(g1, false)) - d;
    y = p.power_at(left) + p.power_at(right);
  }
  return EmpiricalCdf(std::move(out));
}

double worst_gap(const MdParams& p, const EmpiricalCdf& emp) {
  double worst = 0;
  for (double q : {0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99}) {
    double y = emp.sorted()[static_cast<std::size_t>(q * emp.size())];
    worst = std::max(worst, std::abs(md_interference_cdf(p, y, MdMode::full) - emp(y)));
  }
  return worst;
}

}  // namespace

TEST_SUITE("md_interference") {
  TEST_CASE("cdf is monotone and bounded") {
    for (double d : {50.0, 250.0, 600.0}) {
      MdParams p = defaults(d);
      double prev = 0;
      for (double y : log_grid(1e-18, 1e-6, 120)) {
        double f = md_interference_cdf(p, y);
        CHECK(f >= prev - 1e-9);
        CHECK(f >= 0.0);
        CHECK(f <= 1.0);
        prev = f;
      }
      CHECK(md_interference_cdf(p, 0.0) == 0.0);
      CHECK(md_interference_cdf(p, -3.0) == 0.0);
    }
  }

  TEST_CASE("approximate and full agree where interferers cannot fall between") {
    MdParams p = defaults(120);
    for (double y : log_grid(1e-16, 1e-9, 15)) {
      double a = md_interference_cdf(p, y, MdMode::approximate);
      double f = md_interference_cdf(p, y, MdMode::full);
      CHECK(std::abs(a - f) < 1e-9);
    }
  }

  TEST_CASE("complete expression against a Monte Carlo of the same model") {
    // small R so that the between case carries real weight
    for (auto [d, r] : {std::pair{250.0, 100}, std::pair{200.0, 20}, std::pair{60.0, 5}}) {
      MdParams p = defaults(d, r);
      CAPTURE(d);
      CAPTURE(r);
      CHECK(worst_gap(p, independent_mixture_oracle(p, 200000, 77 + r)) < 0.006);
    }
  }

  TEST_CASE("two-nearest geometry agrees where the between case is rare") {
    MdParams p = defaults(250, 100);
    Rng rng(12345);
    CHECK(worst_gap(p, interference_oracle(p, 200000, rng)) < 0.006);
  }

  TEST_CASE("geometry helpers") {
    MdParams p = defaults(100);
    CHECK(p.distance_for(p.power_at(37.0)) == doctest::Approx(37.0));
    // derivative by central difference
    double w = p.power_at(80), h = w * 1e-6;
    CHECK(p.h_prime(w) == doctest::Approx((p.h(w + h, 0) - p.h(w - h, 0)) / (2 * h)).epsilon(1e-6));
    CHECK(md_needs_full(p, p.power_at(100) * 2));
    CHECK_FALSE(md_needs_full(p, p.power_at(100) / 2));
    CHECK(md_needs_full(defaults(100, 5), 1e-20));
  }

  TEST_CASE("invalid parameters") {
    MdParams p = defaults(100);
    p.rho = 0;
    CHECK_THROWS_AS(md_interference_cdf(p, 1e-10), DomainError);
    p = defaults(100);
    p.r_total = 0;
    CHECK_THROWS_AS(md_interference_cdf(p, 1e-10), DomainError);
    CHECK_THROWS_AS(md_interference_cdf(defaults(100), std::nan("")), DomainError);
  }
}
