#include <benchmark/benchmark.h>

#include "coalescent/builders.hpp"
#include "coalescent/collapse.hpp"
#include "coalescent/contraction.hpp"

using namespace coalescent;

namespace {

PLContraction witness(int n) {
  const auto c = full_simplex(n).complex;
  return witness_from_collapse(c, greedy_collapse(c, CollapseStrategy::Lex).sequence);
}

}  // namespace

static void BM_Evaluate(benchmark::State& state) {
  const auto h = witness(static_cast<int>(state.range(0)));
  const auto points = sample_points(h, 64, 1);
  const Rational t(1, 2);
  for (auto _ : state) {
    for (const auto& p : points) benchmark::DoNotOptimize(evaluate(h, p, t));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(points.size()));
}
BENCHMARK(BM_Evaluate)->Arg(2)->Arg(4)->Arg(6);

static void BM_CoalescenceAudit(benchmark::State& state) {
  const auto h = witness(3);
  for (auto _ : state) benchmark::DoNotOptimize(check_coalescent(h, {100, 20, 1}));
}
BENCHMARK(BM_CoalescenceAudit);
