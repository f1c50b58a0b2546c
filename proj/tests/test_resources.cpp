#include <doctest.h>

#include "v2v/error.hpp"
#include "v2v/resources.hpp"

using namespace v2v;

TEST_SUITE("resources") {
  TEST_CASE("grid from CAM parameters") {
    CamConfig cam;
    ResourceGrid g = grid_from_cam(cam);
    CHECK(g.r_time == 100);
    CHECK(g.r_freq == 1);
    CHECK(g.r_total == 100);
    cam.beacon_frequency_hz = 2;
    CHECK(grid_from_cam(cam).r_time == 500);
    cam.beacon_frequency_hz = 3;
    CHECK(grid_from_cam(cam).r_time == 333);
    cam.beacon_frequency_hz = 10;
    cam.rbs_per_cam = 20;  // 10 RB pairs: four per subframe
    CHECK(grid_from_cam(cam).r_freq == 4);
    CHECK(grid_from_cam(cam).r_total == 400);
    cam.rbs_per_cam = 100;
    CHECK_THROWS_AS(grid_from_cam(cam), ConfigError);
    cam = CamConfig{};
    cam.beacon_frequency_hz = 2000;
    CHECK_THROWS_AS(grid_from_cam(cam), ConfigError);
    cam.beacon_frequency_hz = 0;
    CHECK_THROWS_AS(grid_from_cam(cam), ConfigError);
  }

  TEST_CASE("resource numbering") {
    ResourceGrid g = ResourceGrid::make(5, 3);
    CHECK(g.r_total == 15);
    for (int r = 1; r <= g.r_total; ++r) {
      int t = time_slot(g, r), f = freq_slot(g, r);
      CHECK(r == (f - 1) * g.r_time + t);
      CHECK(t >= 1);
      CHECK(t <= 5);
    }
    CHECK(same_subframe(g, 2, 7));
    CHECK_FALSE(same_subframe(g, 2, 3));
    CHECK_THROWS_AS(time_slot(g, 0), DomainError);
    CHECK_THROWS_AS(freq_slot(g, 16), DomainError);
  }

  TEST_CASE("inconsistent grid") {
    ResourceGrid g{10, 3, 3};
    CHECK_THROWS_AS(g.validate(), ConfigError);
    CHECK_THROWS_AS(ResourceGrid::make(0), ConfigError);
  }
}
