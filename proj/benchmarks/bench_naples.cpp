#include <benchmark/benchmark.h>

#include "naples/naples.hpp"

namespace {

using namespace naples;

void BM_EnumerateNaples(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  EnumerateOptions opts;
  opts.threads = static_cast<unsigned>(state.range(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate({Family::naples, n, n, k}, opts));
  }
}
BENCHMARK(BM_EnumerateNaples)->Args({5, 2, 1})->Args({6, 2, 1})->Args({6, 2, 4})->Unit(benchmark::kMillisecond);

void BM_ParkNaples(benchmark::State& state) {
  const PrefSeq f{4, 4, 7, 1, 1, 9, 10, 10, 1};
  for (auto _ : state) benchmark::DoNotOptimize(park_naples(f, 10, 4));
}
BENCHMARK(BM_ParkNaples);

void BM_Xi(benchmark::State& state) {
  const PrefSeq f{5, 5, 4, 4, 3, 5, 10, 6, 10};
  for (auto _ : state) benchmark::DoNotOptimize(xi(f, 10, 4));
}
BENCHMARK(BM_Xi);

void BM_XiRoundTripAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto members = enumerate({Family::contained, n, n, 1});
  for (auto _ : state) {
    for (const auto& f : members) benchmark::DoNotOptimize(xi_inverse(xi(f, n, 1), n, 1));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(members.size()));
}
BENCHMARK(BM_XiRoundTripAll)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_XiBar(benchmark::State& state) {
  const PrefSeq f{4, 4, 7, 1, 2, 2, 5, 9, 3, 10};
  for (auto _ : state) benchmark::DoNotOptimize(xi_bar(f, 10, 4));
}
BENCHMARK(BM_XiBar);

void BM_PsiBig(benchmark::State& state) {
  const PrefSeq f{6, 6, 6, 6, 5, 6, 8, 8};
  for (auto _ : state) benchmark::DoNotOptimize(psi_big(f, 10, 3));
}
BENCHMARK(BM_PsiBig);

}  // namespace
BENCHMARK_MAIN();
