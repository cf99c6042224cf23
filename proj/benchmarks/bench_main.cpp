#include <benchmark/benchmark.h>

#include "pfres/hilbert.hpp"

using namespace pfres;

namespace {

SeedData seed(benchmark::State& state) {
  auto f = static_cast<unsigned>(state.range(0)), g = static_cast<unsigned>(state.range(1));
  return SeedData::generic({f, g, epsilon_max(f - g), PrimeField::kDefaultPrime, 1, 1});
}

void BM_BuildM(benchmark::State& state) {
  auto s = seed(state);
  for (auto _ : state) benchmark::DoNotOptimize(build_M(s));
}
BENCHMARK(BM_BuildM)->Args({6, 3})->Args({8, 3})->Args({9, 3})->Unit(benchmark::kMillisecond);

void BM_CheckComplex(benchmark::State& state) {
  auto m = build_M(seed(state));
  for (auto _ : state) benchmark::DoNotOptimize(check_complex(m));
}
BENCHMARK(BM_CheckComplex)->Args({6, 3})->Args({7, 3})->Unit(benchmark::kMillisecond);

void BM_Minimize(benchmark::State& state) {
  auto m = build_M(seed(state));
  for (auto _ : state) benchmark::DoNotOptimize(minimize(m));
}
BENCHMARK(BM_Minimize)->Args({6, 2})->Args({6, 3})->Args({7, 3})->Unit(benchmark::kMillisecond);

void BM_ConstantRanks(benchmark::State& state) {
  auto m = build_M(seed(state));
  for (auto _ : state) benchmark::DoNotOptimize(betti_from_constant_ranks(m));
}
BENCHMARK(BM_ConstantRanks)->Args({6, 3})->Args({7, 3})->Unit(benchmark::kMillisecond);

void BM_MinorsGroebner(benchmark::State& state) {
  auto minors = maximal_minors(build_psi(seed(state)));
  for (auto _ : state) benchmark::DoNotOptimize(groebner_basis(minors));
}
BENCHMARK(BM_MinorsGroebner)->Args({5, 2})->Args({6, 3})->Unit(benchmark::kMillisecond);

void BM_Colon(benchmark::State& state) {
  auto s = seed(state);
  auto ig = groebner_basis(maximal_minors(build_psi(s)));
  auto tau = tau_ideal(s);
  for (auto _ : state) benchmark::DoNotOptimize(colon(ig, tau));
}
BENCHMARK(BM_Colon)->Args({5, 2})->Unit(benchmark::kMillisecond);

void BM_ClosedForms(benchmark::State& state) {
  for (auto _ : state)
    for (unsigned f = 3; f <= 10; ++f)
      for (unsigned g = 2; g < f; ++g) {
        benchmark::DoNotOptimize(hn_closed_1(g, f, epsilon_max(f - g)));
        benchmark::DoNotOptimize(hn_closed_2(g, f, epsilon_max(f - g)));
      }
}
BENCHMARK(BM_ClosedForms)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  auto id = static_cast<Identity>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(identity_sweep(id, static_cast<int>(state.range(1))));
}
BENCHMARK(BM_Sweep)
    ->Args({static_cast<int>(Identity::GammaLemma), 10})
    ->Args({static_cast<int>(Identity::K95_12g), 20})
    ->Args({static_cast<int>(Identity::L25_1), 30})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
