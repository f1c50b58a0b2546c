#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "v2v/error.hpp"
#include "v2v/experiments.hpp"

using namespace v2v;

TEST_SUITE("experiments") {
  TEST_CASE("names") {
    for (auto k : {ExperimentKind::prp_vs_distance, ExperimentKind::prp_vs_density, ExperimentKind::d09_vs_density,
                   ExperimentKind::prp_vs_r, ExperimentKind::validate})
      CHECK(parse_experiment(experiment_name(k)) == k);
    CHECK(experiment_name(ExperimentKind::prp_vs_r) == "prp-vs-R");
    CHECK_THROWS_AS(parse_experiment("prp"), ConfigError);
  }

  TEST_CASE("CSV layout") {
    std::ostringstream os;
    write_csv(os, {{100, "RR", "analysis", 0.776912345, NAN, NAN}, {112.5, "MD", "simulation", 1.0, 0.99, 1.0}});
    CHECK(os.str() ==
          "x,algorithm,source,value,ci_low,ci_high\n"
          "100,RR,analysis,0.776912,,\n"
          "112.5,MD,simulation,1,0.99,1\n");
  }

  TEST_CASE("analysis-only distance sweep") {
    Config cfg;
    cfg.sweep.distances = {100, 300};
    cfg.sweep.simulate = false;
    cfg.resolve();
    auto rows = prp_vs_distance(cfg);
    REQUIRE(rows.size() == 4);
    for (const auto& r : rows) {
      CHECK(r.source == "analysis");
      CHECK(std::isnan(r.ci_low));
    }
    CHECK(rows[0].value == doctest::Approx(0.7769).epsilon(1e-4));
  }

  TEST_CASE("density and R sweeps") {
    Config cfg;
    cfg.sweep.densities = {0.05, 0.2};
    cfg.sweep.cam_frequencies = {5, 10};
    cfg.sweep.simulate = false;
    cfg.resolve();
    auto dens = prp_vs_density(cfg);
    REQUIRE(dens.size() == 4);
    // RR at fixed distance gets worse with density
    double rr_lo = 0, rr_hi = 0;
    for (const auto& r : dens)
      if (r.algorithm == "RR") (r.x == 0.05 ? rr_lo : rr_hi) = r.value;
    CHECK(rr_lo > rr_hi);
    auto byr = prp_vs_r(cfg);
    REQUIRE(byr.size() == 4);
    CHECK(byr[0].x == 200);
    CHECK(byr[2].x == 100);
    // more resources, less RR interference
    CHECK(byr[0].value > byr[2].value);
  }

  TEST_CASE("files written") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "v2v_experiments_test";
    fs::remove_all(dir);
    Config cfg;
    cfg.sweep.distances = {50, 150};
    cfg.sweep.simulate = false;
    cfg.resolve();
    ExperimentSpec spec;
    spec.kind = ExperimentKind::prp_vs_distance;
    spec.out_dir = dir.string();
    std::ostringstream log;
    auto out = run_experiment_spec(spec, cfg, log);
    REQUIRE(out.files.size() == 3);
    for (const auto& f : out.files) CHECK(fs::exists(f));
    std::ifstream csv(dir / "prp-vs-distance.csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "x,algorithm,source,value,ci_low,ci_high");
    std::ifstream man(dir / "prp-vs-distance.manifest.ini");
    std::stringstream text;
    text << man.rdbuf();
    std::istringstream again(text.str());
    CHECK_NOTHROW(parse_config(again));
    fs::remove_all(dir);
  }
}
