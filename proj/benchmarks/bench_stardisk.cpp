#include <benchmark/benchmark.h>

#include "coalescent/builders.hpp"
#include "coalescent/collapse.hpp"
#include "coalescent/stardisk.hpp"

using namespace coalescent;

static void BM_StarDiskReport(benchmark::State& state) {
  const auto c = state.range(0) == 0 ? dunce_hat().complex : bings_house().complex;
  for (auto _ : state) benchmark::DoNotOptimize(star_disk_report(c));
}
BENCHMARK(BM_StarDiskReport)->Arg(0)->Arg(1);

static void BM_DiscOracleDunceHat(benchmark::State& state) {
  const auto c = dunce_hat().complex;
  for (auto _ : state) {
    for (VertexId v : c.vertices()) benchmark::DoNotOptimize(brute_force_disk_oracle(c, v, 64));
  }
}
BENCHMARK(BM_DiscOracleDunceHat);

static void BM_FreeFacesFlap(benchmark::State& state) {
  const auto c = dunce_hat_with_flap().complex;
  for (auto _ : state) benchmark::DoNotOptimize(free_faces(c));
}
BENCHMARK(BM_FreeFacesFlap);
