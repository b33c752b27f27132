#include <benchmark/benchmark.h>

#include "padicla/fixtures.hpp"
#include "padicla/locan.hpp"

namespace padicla {
namespace {

void BM_CharacteristicPolynomial(benchmark::State& state) {
  const auto t = make_random_nilres(5, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_polynomial(t));
}
BENCHMARK(BM_CharacteristicPolynomial)->DenseRange(2, 10, 4);

void BM_LocanDegree(benchmark::State& state) {
  const auto t = make_random_nilres(3, static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(locan_degree(t));
}
BENCHMARK(BM_LocanDegree)->DenseRange(2, 10, 4);

void BM_CharpolyWitness(benchmark::State& state) {
  const auto t = make_translation(2, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto cert = charpoly_witness(t);
    benchmark::DoNotOptimize(verify_certificate(cert, t));
  }
}
BENCHMARK(BM_CharpolyWitness)->Arg(4)->Arg(8)->Arg(12);

void BM_AlgebraClosure(benchmark::State& state) {
  const auto t = make_translation(3, static_cast<std::size_t>(state.range(0)));
  const auto space = t.space();
  for (auto _ : state) benchmark::DoNotOptimize(algebra_closure(space, {t}, 2));
}
BENCHMARK(BM_AlgebraClosure)->Arg(3)->Arg(6)->Arg(9);

}  // namespace
}  // namespace padicla
