#include <doctest.h>

#include <cmath>

#include "v2v/analysis/quadrature.hpp"
#include "v2v/error.hpp"

using namespace v2v;

TEST_SUITE("quadrature") {
  TEST_CASE("Gauss-Hermite 64 is exact for even monomials up to degree 126") {
    const auto& q = gauss_hermite_64();
    REQUIRE(q.nodes.size() == 64);
    for (int k = 0; k <= 40; ++k) {
      double s = 0;
      for (std::size_t i = 0; i < q.nodes.size(); ++i) s += q.weights[i] * std::pow(q.nodes[i], 2 * k);
      // int x^{2k} e^{-x^2} dx = Gamma(k + 1/2)
      CAPTURE(k);
      CHECK(s == doctest::Approx(std::tgamma(k + 0.5)).epsilon(1e-11));
    }
  }

  TEST_CASE("Gauss-Hermite rule is symmetric and sorted") {
    auto q = gauss_hermite(9);
    for (std::size_t i = 0; i + 1 < q.nodes.size(); ++i) CHECK(q.nodes[i] < q.nodes[i + 1]);
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
      CHECK(q.nodes[i] == doctest::Approx(-q.nodes[q.nodes.size() - 1 - i]));
      CHECK(q.weights[i] == doctest::Approx(q.weights[q.nodes.size() - 1 - i]));
    }
    CHECK(q.nodes[4] == doctest::Approx(0.0));
    // odd moments vanish, first even moment sqrt(pi)/2
    double m1 = 0, m2 = 0;
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
      m1 += q.weights[i] * q.nodes[i];
      m2 += q.weights[i] * q.nodes[i] * q.nodes[i];
    }
    CHECK(std::abs(m1) < 1e-14);
    CHECK(m2 == doctest::Approx(std::sqrt(M_PI) / 2));
  }

  TEST_CASE("adaptive integration") {
    CHECK(integrate([](double x) { return std::sin(x); }, 0, M_PI) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate([](double x) { return std::exp(-x); }, 0, 50, std::vector<double>{1.0, 10.0}) ==
          doctest::Approx(1 - std::exp(-50.0)).epsilon(1e-12));
    CHECK(integrate([](double) { return 1.0; }, 2, 2) == 0.0);
  }

  TEST_CASE("non-finite integrand is reported") {
    CHECK_THROWS_AS(integrate([](double x) { return 1.0 / (x - 0.5) / 0.0; }, 0, 1), NumericError);
  }
}
