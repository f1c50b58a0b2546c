#pragma once

#include <cstdint>
#include <random>

namespace v2v {

using Rng = std::mt19937_64;

/// One step of the splitmix64 generator; also a good 64-bit mixer.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of stream `stream` derived from `master`.
///
/// Replication k of an experiment uses derive_seed(master, k); sub-streams
/// inside a replication (scenario, allocators, shadowing) are derived from the
/// replication seed the same way. The rule depends only on the indices, so the
/// result is the same whatever order or thread the replications run in.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

/// Standard normal deviate that is a pure function of its arguments.
double counter_normal(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c);

}  // namespace v2v
