#pragma once

#include <cstddef>
#include <vector>

#include "v2v/analysis/md_interference.hpp"
#include "v2v/rng.hpp"
#include "v2v/stats.hpp"

namespace v2v {

/// Co-resource interferers of RR around a receiver at the origin: a PPP of
/// density rho_rr on [-window, window].
struct RrOracleParams {
  double rho_rr = 0.001;
  double beta = 4.0;
  double pr0 = 1.0;
  double window_m = 20000;
};

/// Empirical CDF of the total received interference, one PPP per sample.
/// DomainError for fewer than 1e4 samples.
EmpiricalCdf interference_oracle(const RrOracleParams& p, std::size_t samples, Rng& rng);

/// Interference from the nearest co-resource user on each side of the
/// destination under MD. Source at 0, destination at d: the R-th neighbour
/// of the source towards the destination is drawn as gamma(R, rho); if it
/// falls short of d it is the near-side interferer and the far-side one is
/// the 2R-th neighbour, otherwise the near-side one is the R-th neighbour
/// behind the source.
EmpiricalCdf interference_oracle(const MdParams& p, std::size_t samples, Rng& rng);

/// n points spaced logarithmically over [lo, hi].
std::vector<double> log_grid(double lo, double hi, std::size_t n);

}  // namespace v2v
