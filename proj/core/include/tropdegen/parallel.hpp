#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace tropdegen {

/// Environment variable holding the worker-thread count.
inline constexpr const char* kThreadsEnvVar = "TROPDEGEN_THREADS";

/// Value of TROPDEGEN_THREADS if it parses to a positive integer, else the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs body(i) for i in [0, n) on up to thread_count() threads with a static
/// block partition. `body` must only write to per-index state.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

/// Independent generator for sample `index` of a run seeded with `seed`, so
/// results never depend on how indices are spread over threads.
std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index);

/// Uniform double in [0, 1) built from the top 53 bits; identical on every
/// standard library, unlike std::uniform_real_distribution.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * unit_uniform(rng);
}

}  // namespace tropdegen
