#include <benchmark/benchmark.h>

#include "tropdegen/tropdegen.hpp"

using namespace tropdegen;

namespace {

ComplexLaurentPoly line() { return ComplexLaurentPoly(2, {{{1, 0}, 1.0}, {{0, 1}, 1.0}, {{0, 0}, 1.0}}); }

void BM_SampleAmoeba(benchmark::State& state) {
  const auto f = line();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_amoeba_all_axes(f, static_cast<std::uint64_t>(state.range(0)), Window::cube(2, -20, 20), 1));
  }
}
BENCHMARK(BM_SampleAmoeba)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_LopsidedCertificate(benchmark::State& state) {
  const auto f = line();
  for (auto _ : state) benchmark::DoNotOptimize(lopsided_certificate(f, Point2{2.0, -1.5}));
}
BENCHMARK(BM_LopsidedCertificate);

void BM_PolycircleSup(benchmark::State& state) {
  const auto f = line();
  const MonomialValuation alpha({1.0, std::sqrt(2.0)});
  for (auto _ : state) benchmark::DoNotOptimize(polycircle_sup(f, alpha, 0.05));
}
BENCHMARK(BM_PolycircleSup)->Unit(benchmark::kMillisecond);

}  // namespace
