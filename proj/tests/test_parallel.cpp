#include <gtest/gtest.h>

#include <atomic>
#include <cstdlib>
#include <set>

#include "tropdegen/parallel.hpp"

using namespace tropdegen;

TEST(Parallel, VisitsEveryIndexOnce) {
  std::vector<std::atomic<int>> hits(10007);
  parallel_for(hits.size(), [&](std::size_t i) { hits[i]++; });
  for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(Parallel, PropagatesExceptions) {
  EXPECT_THROW(parallel_for(1000,
                            [](std::size_t i) {
                              if (i == 777) throw std::runtime_error("boom");
                            }),
               std::runtime_error);
}

TEST(Parallel, EmptyRangeIsNoop) {
  parallel_for(0, [](std::size_t) { FAIL(); });
}

TEST(Parallel, ThreadCountFromEnvironment) {
  setenv(kThreadsEnvVar, "3", 1);
  EXPECT_EQ(thread_count(), 3u);
  setenv(kThreadsEnvVar, "zero", 1);
  EXPECT_GE(thread_count(), 1u);
  unsetenv(kThreadsEnvVar);
  EXPECT_GE(thread_count(), 1u);
}

TEST(Substream, DeterministicAndDistinct) {
  EXPECT_EQ(substream(1, 2)(), substream(1, 2)());
  std::set<std::uint64_t> firsts;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (std::uint64_t i = 0; i < 50; ++i) firsts.insert(substream(seed, i)());
  }
  EXPECT_EQ(firsts.size(), 1000u);
}

TEST(UnitUniform, RangeAndMean) {
  auto rng = substream(5, 0);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = unit_uniform(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.01);
}
