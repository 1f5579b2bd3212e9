#include <benchmark/benchmark.h>

#include "coalescent/builders.hpp"
#include "coalescent/evidence.hpp"

using namespace coalescent;

static void BM_HomologyDunceHat(benchmark::State& state) {
  const auto c = dunce_hat().complex;
  for (auto _ : state) benchmark::DoNotOptimize(homology(c));
}
BENCHMARK(BM_HomologyDunceHat);

static void BM_HomologyBingsHouse(benchmark::State& state) {
  const auto c = bings_house().complex;
  for (auto _ : state) benchmark::DoNotOptimize(homology(c));
}
BENCHMARK(BM_HomologyBingsHouse);

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto c = dunce_hat().complex;
  const auto m = boundary_matrix(c, 2);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm);

static void BM_Pi1DunceHat(benchmark::State& state) {
  const auto c = dunce_hat().complex;
  for (auto _ : state) benchmark::DoNotOptimize(simplify_presentation(pi1_presentation(c, 0), 10000));
}
BENCHMARK(BM_Pi1DunceHat);
