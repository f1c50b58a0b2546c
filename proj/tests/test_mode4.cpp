#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "v2v/error.hpp"
#include "v2v/mode4.hpp"

using namespace v2v;

namespace {

Scenario line(std::size_t n, double spacing) {
  Scenario s;
  s.road_length = 1e6;
  for (std::size_t i = 0; i < n; ++i) {
    s.positions.push_back(spacing * static_cast<double>(i));
    s.ids.push_back(static_cast<std::uint32_t>(i));
  }
  return s;
}

Mode4Vehicle blank(int W, int R) {
  Mode4Vehicle v;
  v.samples.assign(W * R, 0.0f);
  v.valid.assign(W * R, 0);
  v.last_busy.assign(R, -1);
  return v;
}

}  // namespace

TEST_SUITE("mode4") {
  TEST_CASE("timing derived from the configuration") {
    Mode4Config cfg;
    CHECK(cfg.window_periods() == 10);
    CHECK(cfg.min_countdown() == 5);
    CHECK(cfg.max_countdown() == 15);
    cfg.p_keep = 1.5;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = Mode4Config{};
    cfg.reselection_max_s = 0.4;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
  }

  TEST_CASE("sensing excludes the own signal and the own subframe") {
    Scenario s = line(3, 50);
    RadioConfig radio;
    radio.shadow_sigma_db = 0;
    ShadowField f(0, 25, 1);
    LinkTable links(s, radio, f);
    ResourceGrid g = ResourceGrid::make(5, 2);
    Allocation a{{1, 1, 7}};  // resource 7 sits in subframe 2
    SensingReport rep = sense_period(s, a, links, g, radio);
    // vehicle 0 hears vehicle 1 on resource 1 only
    CHECK(rep.power_mw[rep.index(0, 1)] == doctest::Approx(links.power(1, 0)));
    CHECK(rep.power_mw[rep.index(0, 7)] == doctest::Approx(links.power(2, 0)));
    CHECK(rep.power_mw[rep.index(0, 3)] == 0.0f);
    CHECK(rep.sensed[rep.index(0, 1)] == 0);
    CHECK(rep.sensed[rep.index(0, 6)] == 0);  // same subframe as resource 1
    CHECK(rep.sensed[rep.index(0, 2)] == 1);
    CHECK(rep.sensed[rep.index(2, 2)] == 0);
    // one user alone at 50 m is decodable
    CHECK(rep.busy[rep.index(2, 1)] == 1);
    CHECK(rep.busy[rep.index(0, 4)] == 0);
  }

  TEST_CASE("candidates avoid busy, strongly sensed resources") {
    const int R = 100;
    Mode4Config cfg;
    Mode4State st;
    st.r_total = R;
    st.period = 20;
    Mode4Vehicle v = blank(cfg.window_periods(), R);
    for (int r = 1; r <= 80; ++r) {
      v.last_busy[r - 1] = 18;
      for (int w = 0; w < cfg.window_periods(); ++w) {
        v.samples[w * R + r - 1] = 1e-6f;  // -60 dBm, above I_th
        v.valid[w * R + r - 1] = 1;
      }
    }
    Rng rng(2);
    auto c = mode4_candidates(v, st, ResourceGrid::make(R), cfg, rng);
    CHECK(c.size() == 20);
    for (int r : c) CHECK(r > 80);
    // once the busy flag ages out of the window the resources become legal
    st.period = 40;
    auto later = mode4_candidates(v, st, ResourceGrid::make(R), cfg, rng);
    CHECK(std::count_if(later.begin(), later.end(), [](int r) { return r > 80; }) == 20);
  }

  TEST_CASE("busy but weak resources stay legal") {
    const int R = 10;
    Mode4Config cfg;
    Mode4State st;
    st.r_total = R;
    st.period = 5;
    Mode4Vehicle v = blank(cfg.window_periods(), R);
    for (int r = 1; r <= R; ++r) {
      v.last_busy[r - 1] = 4;
      v.samples[r - 1] = 1e-6f;
      v.valid[r - 1] = 1;
    }
    v.samples[0] = 1e-15f;  // far below I_th
    Rng rng(1);
    auto c = mode4_candidates(v, st, ResourceGrid::make(R), cfg, rng);
    REQUIRE(c.size() == 2);
    CHECK(std::find(c.begin(), c.end(), 1) != c.end());
  }

  TEST_CASE("all busy: topped up with the least interfered") {
    const int R = 10;
    Mode4Config cfg;
    Mode4State st;
    st.r_total = R;
    st.period = 5;
    Mode4Vehicle v = blank(cfg.window_periods(), R);
    for (int r = 1; r <= R; ++r) {
      v.last_busy[r - 1] = 4;
      v.samples[r - 1] = static_cast<float>(1e-6 * r);
      v.valid[r - 1] = 1;
    }
    Rng rng(1);
    auto c = mode4_candidates(v, st, ResourceGrid::make(R), cfg, rng);
    CHECK(std::set<int>(c.begin(), c.end()) == std::set<int>{1, 2});
  }

  TEST_CASE("idle channel gives uniform candidates") {
    const int R = 20;
    Mode4Config cfg;
    Mode4State st;
    st.r_total = R;
    Mode4Vehicle v = blank(cfg.window_periods(), R);
    std::vector<double> hits(R + 1, 0);
    Rng rng(7);
    const int trials = 20000;
    for (int k = 0; k < trials; ++k)
      for (int r : mode4_candidates(v, st, ResourceGrid::make(R), cfg, rng)) hits[r] += 1;
    double expect = trials * 4.0 / R, chi2 = 0;
    for (int r = 1; r <= R; ++r) chi2 += std::pow(hits[r] - expect, 2) / expect;
    CHECK(chi2 < 43.8);  // 99.9% point, 19 dof
  }

  TEST_CASE("p_keep = 1 never changes a resource") {
    Scenario s = line(30, 20);
    ResourceGrid g = ResourceGrid::make(10);
    Mode4Config cfg;
    cfg.p_keep = 1.0;
    Mode4State st;
    Rng rng(3);
    Allocation first = mode4_step(st, s, g, nullptr, cfg, rng);
    for (int k = 0; k < 60; ++k) CHECK(mode4_step(st, s, g, nullptr, cfg, rng).resource == first.resource);
    CHECK(st.reselections == 0);
  }

  TEST_CASE("p_keep = 0 reselects at every expiry") {
    Scenario s = line(30, 20);
    ResourceGrid g = ResourceGrid::make(10);
    Mode4Config cfg;
    Mode4State st;
    Rng rng(3);
    mode4_step(st, s, g, nullptr, cfg, rng);
    for (const auto& [id, v] : st.vehicles) {
      CHECK(v.countdown >= 5);
      CHECK(v.countdown <= 15);
    }
    const int periods = 150;
    for (int k = 0; k < periods; ++k) mode4_step(st, s, g, nullptr, cfg, rng);
    // one expiry every 10 periods on average
    double per_vehicle = static_cast<double>(st.reselections) / 30;
    CHECK(per_vehicle > periods / 15.0 - 1);
    CHECK(per_vehicle < periods / 5.0 + 1);
  }

  TEST_CASE("departed vehicles leave the state") {
    Scenario s = line(5, 20);
    ResourceGrid g = ResourceGrid::make(10);
    Mode4Config cfg;
    Mode4State st;
    Rng rng(3);
    mode4_step(st, s, g, nullptr, cfg, rng);
    CHECK(st.vehicles.size() == 5);
    s.positions.pop_back();
    s.ids.pop_back();
    mode4_step(st, s, g, nullptr, cfg, rng);
    CHECK(st.vehicles.size() == 4);
    CHECK_FALSE(st.vehicles.contains(4));
    CHECK_THROWS_AS(mode4_step(st, s, ResourceGrid::make(20), nullptr, cfg, rng), DomainError);
  }
}
