#include <doctest.h>

#include <cmath>
#include <sstream>

#include "v2v/error.hpp"
#include "v2v/scenario.hpp"
#include "v2v/stats.hpp"

using namespace v2v;

namespace {

std::size_t parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    load_trace(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_SUITE("scenario") {
  TEST_CASE("PPP drop") {
    ScenarioConfig cfg;
    cfg.seed = 7;
    Scenario s = generate_ppp(cfg);
    CHECK(s.road_length == 10000);
    for (std::size_t i = 0; i + 1 < s.size(); ++i) CHECK(s.positions[i] <= s.positions[i + 1]);
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(s.ids[i] == i);
      CHECK(s.positions[i] >= 0);
      CHECK(s.positions[i] < s.road_length);
    }
    // same seed, same drop
    CHECK(generate_ppp(cfg).positions == s.positions);
  }

  TEST_CASE("PPP count is Poisson") {
    ScenarioConfig cfg;
    cfg.road_length = 1000;
    std::vector<double> counts;
    for (std::uint64_t k = 0; k < 400; ++k) {
      cfg.seed = k + 1;
      counts.push_back(static_cast<double>(generate_ppp(cfg).size()));
    }
    MeanCi ci = student_t_ci(counts);
    CHECK(std::abs(ci.mean - 100) < 3);
    double var = 0;
    for (double c : counts) var += (c - ci.mean) * (c - ci.mean);
    var /= counts.size() - 1;
    CHECK(var > 75);
    CHECK(var < 130);
  }

  TEST_CASE("distances") {
    Scenario s;
    s.road_length = 100;
    s.wrap = true;
    CHECK(s.distance(5, 95) == doctest::Approx(10));
    s.wrap = false;
    CHECK(s.distance(5, 95) == doctest::Approx(90));
    s.positions = {1, 4};
    s.ids = {0, 1};
    CHECK(empirical_density(s) == doctest::Approx(0.02));
  }

  TEST_CASE("config validation") {
    ScenarioConfig cfg;
    cfg.density = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = ScenarioConfig{};
    cfg.road_length = INFINITY;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
  }

  TEST_CASE("trace loading") {
    std::istringstream in(
        "\xEF\xBB\xBFtime_s,vehicle_id,position_m\r\n"
        "0,3,50\r\n"
        "0,1,10\r\n"
        "\r\n"
        "0.1,3,52\r\n"
        "0.1,1,11.5\r\n"
        "0.1,9,11.5\r\n");
    auto snaps = load_trace(in);
    REQUIRE(snaps.size() == 2);
    CHECK(snaps[0].positions == std::vector<double>{10, 50});
    CHECK(snaps[0].ids == std::vector<std::uint32_t>{1, 3});
    CHECK(snaps[0].road_length == 53);
    // tie keeps input order
    CHECK(snaps[1].ids == std::vector<std::uint32_t>{1, 9, 3});
  }

  TEST_CASE("trace errors carry line numbers") {
    CHECK(parse_error_line("time,id,x\n") == 1);
    CHECK(parse_error_line("time_s,vehicle_id,position_m\n0,1,5\n0,2\n") == 3);
    CHECK(parse_error_line("time_s,vehicle_id,position_m\n0,1,abc\n") == 2);
    CHECK(parse_error_line("time_s,vehicle_id,position_m\n0,1,-4\n") == 2);
    CHECK(parse_error_line("time_s,vehicle_id,position_m\n0,1,5\n0,1,6\n") == 3);
    CHECK(parse_error_line("time_s,vehicle_id,position_m\n1,1,5\n0.5,1,6\n") == 3);
    CHECK(parse_error_line("time_s,vehicle_id,position_m\n0,1.5,5\n") == 2);
    std::istringstream in("time_s,vehicle_id,position_m\n0,1,500\n");
    CHECK_THROWS_AS(load_trace(in, TraceFormat{100, false}), ParseError);
  }
}
