#include <benchmark/benchmark.h>

#include "graded_lab/factorization.hpp"
#include "graded_lab/localization.hpp"
#include "graded_lab/primality.hpp"

namespace {

using namespace graded_lab;

void BM_ClassifyAllSubmodulesZn(benchmark::State& state) {
  const ModulePtr m = self_module(make_Zn(static_cast<std::size_t>(state.range(0))));
  const auto subs = enumerate_graded_submodules(m);
  for (auto _ : state) {
    for (const auto& n : subs) benchmark::DoNotOptimize(classify(n).is_weakly_primal);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(subs.size()));
}
BENCHMARK(BM_ClassifyAllSubmodulesZn)->Arg(12)->Arg(24)->Arg(32)->Arg(64);

void BM_EnumerateSubmodulesFree(benchmark::State& state) {
  const ModulePtr m = free_module(make_quadratic(2, static_cast<std::size_t>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graded_submodules(m).size());
}
BENCHMARK(BM_EnumerateSubmodulesFree)->Arg(0)->Arg(1);

void BM_LocalizeZn(benchmark::State& state) {
  const RingPtr r = make_Zn(static_cast<std::size_t>(state.range(0)));
  const ModulePtr m = self_module(r);
  const auto s = multiplicative_closure(r, {5});
  for (auto _ : state) benchmark::DoNotOptimize(localize_module(m, *s)->module()->order());
}
BENCHMARK(BM_LocalizeZn)->Arg(12)->Arg(24)->Arg(48);

void BM_WpRing(benchmark::State& state) {
  const RingPtr r = make_Zn(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_wp_ring(r).is_wp);
}
BENCHMARK(BM_WpRing)->Arg(12)->Arg(24)->Arg(30);

void BM_WpModuleFree(benchmark::State& state) {
  const ModulePtr m = free_module(make_Zn(static_cast<std::size_t>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(is_wp_module(m).is_wp);
}
BENCHMARK(BM_WpModuleFree)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
