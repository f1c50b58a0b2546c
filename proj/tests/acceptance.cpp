// Acceptance criteria 1-12, one PASS/FAIL line each.
//   v2v_acceptance            all criteria
//   v2v_acceptance --only 7   a single criterion (as registered with ctest)
#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "v2v/config.hpp"
#include "v2v/error.hpp"
#include "v2v/validation.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  std::string config_path;
  v2v::ValidationOptions opt;
  app.add_option("--only", only, "criterion numbers (1-12)")->check(CLI::Range(1, 12));
  app.add_option("--config", config_path, "configuration (defaults otherwise)");
  app.add_option("--seed", opt.seed, "master seed")->capture_default_str();
  app.add_option("--threads", opt.threads, "worker threads");
  CLI11_PARSE(app, argc, argv);

  v2v::Config cfg;
  try {
    if (!config_path.empty()) cfg = v2v::load_config(config_path);
    cfg.resolve();
  } catch (const v2v::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  const auto& checks = v2v::all_checks();
  if (only.empty())
    for (int i = 1; i <= static_cast<int>(checks.size()); ++i) only.push_back(i);

  int failed = 0;
  for (int i : only) {
    v2v::CheckResult r;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r = checks[i - 1](cfg, opt);
    } catch (const std::exception& e) {
      r.id = std::to_string(i);
      r.title = "criterion " + std::to_string(i);
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << format_check(r) << std::endl;
    failed += !r.pass;
  }
  std::cout << (only.size() - failed) << "/" << only.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
