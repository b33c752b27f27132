#include <benchmark/benchmark.h>

#include <vector>

#include "padicla/fixtures.hpp"
#include "padicla/mahler.hpp"

namespace padicla {
namespace {

std::vector<PadicScalar> one_plus_p_powers(Prime p, std::size_t count, int prec) {
  std::vector<PadicScalar> out;
  mpz_class x = 1;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(PadicScalar::from_integer(x, p, prec));
    x *= 1 + p;
  }
  return out;
}

void BM_MahlerTransform(benchmark::State& state) {
  const auto samples = one_plus_p_powers(3, static_cast<std::size_t>(state.range(0)), 80);
  for (auto _ : state) benchmark::DoNotOptimize(mahler_transform(samples));
}
BENCHMARK(BM_MahlerTransform)->RangeMultiplier(2)->Range(16, 128);

void BM_AmiceLevel(benchmark::State& state) {
  const auto series = mahler_transform(one_plus_p_powers(2, 64, 80));
  for (auto _ : state) benchmark::DoNotOptimize(amice_level(series));
}
BENCHMARK(BM_AmiceLevel);

void BM_OclaHarness(benchmark::State& state) {
  const auto model = make_toy_admissible(static_cast<Prime>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(ocla_harness(model, 1));
}
BENCHMARK(BM_OclaHarness)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace padicla
