#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "tropdegen/tropdegen.hpp"

using namespace tropdegen;

namespace {

TropicalPolynomial random_tropical(int terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> e(0, 6);
  std::uniform_int_distribution<int> c(-5, 5);
  std::map<ExponentVector, double> t;
  while (static_cast<int>(t.size()) < terms) t.emplace(ExponentVector{e(rng), e(rng)}, c(rng));
  std::vector<TropicalPolynomial::Term> out;
  for (const auto& [m, v] : t) out.push_back({m, v});
  return TropicalPolynomial(2, out);
}

void BM_CornerLocus(benchmark::State& state) {
  const auto f = random_tropical(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(corner_locus_2d(f));
}
BENCHMARK(BM_CornerLocus)->Arg(3)->Arg(10)->Arg(30);

void BM_DistanceToComplex(benchmark::State& state) {
  const auto c = corner_locus_2d(random_tropical(10, 5));
  const Box2 box = Box2::square(-6, 6);
  double x = -6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance_to_complex(c, Point2{x, 0.5}, box));
    x = x > 6 ? -6 : x + 0.01;
  }
}
BENCHMARK(BM_DistanceToComplex);

}  // namespace
