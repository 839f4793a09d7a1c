#include <benchmark/benchmark.h>

#include <random>

#include "tropdegen/tropdegen.hpp"

using namespace tropdegen;

namespace {

PointCloud random_cloud(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-5, 5);
  PointCloud c(2);
  for (std::size_t i = 0; i < n; ++i) c.push_back(std::vector<double>{u(rng), u(rng)});
  return c;
}

void BM_Hausdorff(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_cloud(n, 1);
  const auto b = random_cloud(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff(a, b));
}
BENCHMARK(BM_Hausdorff)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_HausdorffToComplex(benchmark::State& state) {
  const auto complex = corner_locus_2d(
      trivial_tropicalize(ComplexLaurentPoly(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{0, 0}, 1.0}})));
  const auto cloud = random_cloud(10000, 3);
  const Window w = Window::cube(2, -5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff_to_complex(cloud, complex, w));
}
BENCHMARK(BM_HausdorffToComplex)->Unit(benchmark::kMillisecond);

}  // namespace
