#include <doctest.h>

#include <cmath>
#include <vector>

#include "v2v/analysis/prp.hpp"
#include "v2v/analysis/special.hpp"
#include "v2v/error.hpp"

using namespace v2v;

namespace {

const ResourceGrid kGrid = ResourceGrid::make(100);

// sum_k Pois(lambda; (R_t - 1) + k R_t), term by term with lgamma
double p_hd_md_oracle_log(double lambda, int rt) {
  double m = -1e300;
  std::vector<double> t;
  for (int k = 0; k < 200; ++k) {
    double n = rt - 1 + k * rt;
    t.push_back(n * std::log(lambda) - lambda - std::lgamma(n + 1));
    m = std::max(m, t.back());
  }
  double s = 0;
  for (double v : t) s += std::exp(v - m);
  return m + std::log(s);
}

}  // namespace

TEST_SUITE("prp") {
  TEST_CASE("half-duplex probabilities") {
    CHECK(p_hd_rr(kGrid) == doctest::Approx(0.01));
    CHECK(p_hd_rr(ResourceGrid::make(50, 2)) == doctest::Approx(0.02));
    // default case is astronomically small but finite in log space
    double l = log_p_hd_md(0.1, 120, kGrid);
    CHECK(l == doctest::Approx(p_hd_md_oracle_log(12.0, 100)).epsilon(1e-10));
    CHECK(l < -100);
    CHECK(p_hd_md(0.1, 120, kGrid) >= 0.0);
    CHECK(p_hd_md(0.1, 120, ResourceGrid::make(1)) == 1.0);
    // many vehicles in between: residues mod R_t equidistribute
    CHECK(p_hd_md(0.1, 5000, ResourceGrid::make(4)) == doctest::Approx(0.25).epsilon(1e-3));
    CHECK(p_hd_md(0.1, 30, ResourceGrid::make(3)) ==
          doctest::Approx(std::exp(p_hd_md_oracle_log(3.0, 3))).epsilon(1e-10));
  }

  TEST_CASE("frozen curve values") {
    // computed by an independent prototype (scipy quadrature + Zolotarev)
    struct Row {
      double d, rr, md;
    };
    const Row rows[] = {{25, .9325, 1.0},     {100, .7769, 1.0},    {200, .5976, .9998},
                        {250, .5058, .9879},  {300, .3867, .8653},  {350, .2413, .5604},
                        {400, .1155, .2372},  {450, .0447, .0668},  {500, .0151, .0125}};
    RadioConfig radio;
    for (const auto& r : rows) {
      CAPTURE(r.d);
      CHECK(prp(Benchmark::rr, radio, 0.1, kGrid, r.d) == doctest::Approx(r.rr).epsilon(6e-5));
      CHECK(prp(Benchmark::md, radio, 0.1, kGrid, r.d) == doctest::Approx(r.md).epsilon(6e-5));
    }
  }

  TEST_CASE("full MD mode agrees with the approximation at default density") {
    RadioConfig radio;
    for (double d : {120.0, 300.0, 450.0}) {
      double a = prp(Benchmark::md, radio, 0.1, kGrid, d);
      double f = prp(Benchmark::md, radio, 0.1, kGrid, d, AnalysisOptions{MdMode::full});
      CHECK(std::abs(a - f) < 1e-8);
    }
  }

  TEST_CASE("non-increasing in distance") {
    RadioConfig radio;
    std::vector<double> ds;
    for (double d = 25; d <= 600; d += 25) ds.push_back(d);
    for (Benchmark b : {Benchmark::rr, Benchmark::md}) {
      PrpCurve c = prp_curve(b, radio, 0.1, kGrid, ds);
      REQUIRE(c.points.size() == ds.size());
      for (std::size_t i = 0; i < ds.size(); ++i) {
        CHECK(c.points[i].d_sd == ds[i]);
        if (i) CHECK(c.points[i].prp <= c.points[i - 1].prp + 1e-9);
      }
      CHECK(c.points[3].prp == doctest::Approx(prp(b, radio, 0.1, kGrid, ds[3])));
    }
  }

  TEST_CASE("vanishing SINR threshold leaves only half-duplex loss") {
    RadioConfig radio;
    radio.gamma_min_db = -300;
    CHECK(prp(Benchmark::rr, radio, 0.1, kGrid, 300) == doctest::Approx(1 - p_hd_rr(kGrid)).epsilon(1e-6));
    CHECK(prp(Benchmark::md, radio, 0.1, kGrid, 300) == doctest::Approx(1.0).epsilon(1e-6));
  }

  TEST_CASE("d09") {
    RadioConfig radio;
    double rr = d09(Benchmark::rr, radio, 0.1, kGrid);
    double md = d09(Benchmark::md, radio, 0.1, kGrid);
    CHECK(md > rr);
    CHECK(rr == doctest::Approx(39.0625).epsilon(0.03));
    CHECK(md == doctest::Approx(290.625).epsilon(0.005));
    // bisection brackets the crossing to within a metre
    CHECK(prp(Benchmark::md, radio, 0.1, kGrid, md) > 0.9);
    CHECK(prp(Benchmark::md, radio, 0.1, kGrid, md + 1.0) <= 0.9);
    // 1 - P_HD = 0.8 < 0.9 everywhere
    CHECK(d09(Benchmark::rr, radio, 0.1, ResourceGrid::make(5)) == 0.0);
  }

  TEST_CASE("bin average lies between the endpoint values") {
    RadioConfig radio;
    double lo = prp(Benchmark::rr, radio, 0.1, kGrid, 300), hi = prp(Benchmark::rr, radio, 0.1, kGrid, 275);
    double avg = prp_bin_average(Benchmark::rr, radio, 0.1, kGrid, 275, 300);
    CHECK(avg > lo);
    CHECK(avg < hi);
  }

  TEST_CASE("curve validation and domain errors") {
    PrpCurve bad{{{100, 0.5, {}}, {50, 0.4, {}}}};
    CHECK_THROWS_AS(bad.validate(), DomainError);
    PrpCurve out{{{100, 1.5, {}}}};
    CHECK_THROWS_AS(out.validate(), DomainError);
    RadioConfig radio;
    CHECK_THROWS_AS(prp(Benchmark::rr, radio, 0.1, kGrid, 0.0), DomainError);
    CHECK_THROWS_AS(prp(Benchmark::md, radio, -1, kGrid, 10.0), DomainError);
  }
}
