#include <benchmark/benchmark.h>

#include "affcrystal/affcrystal.hpp"

using namespace affcrystal;

namespace {

DominantWeight level_two_weight() { return DominantWeight{{1, 1, 0}}; }

void BM_BeadRow(benchmark::State& state) {
  Partition p{12, 11, 10, 9, 7, 5, 3, 3, 3, 1};
  for (auto _ : state) benchmark::DoNotOptimize(partition_to_bead_row(p, 0));
}
BENCHMARK(BM_BeadRow);

void BM_Quotient(benchmark::State& state) {
  Partition p{12, 11, 10, 9, 7, 5, 3, 3, 3, 1};
  for (auto _ : state) benchmark::DoNotOptimize(ell_quotient(p, 4));
}
BENCHMARK(BM_Quotient);

void BM_FAbacus(benchmark::State& state) {
  auto psi = from_partition(Partition{12, 11, 10, 9, 8, 8, 3, 3, 3, 1}, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(f_abacus(psi, 0));
}
BENCHMARK(BM_FAbacus);

void BM_CrystalGraph(benchmark::State& state) {
  auto psi0 = compact_config(level_two_weight());
  for (auto _ : state) benchmark::DoNotOptimize(crystal_graph(psi0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CrystalGraph)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_EnumerateDescending(benchmark::State& state) {
  auto psi0 = compact_config(level_two_weight());
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_descending(psi0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateDescending)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_ZBorodin(benchmark::State& state) {
  auto bd = boundary_of(DominantWeight{{2, 3, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(Z_borodin(bd, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ZBorodin)->Arg(20)->Arg(100);

void BM_ZRep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Z_rep(level_two_weight(), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ZRep)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_PathIntertwining(benchmark::State& state) {
  auto g = crystal_graph(compact_config(level_two_weight()), 8);
  for (auto _ : state)
    for (const auto& psi : g.layers.back())
      for (int i = 0; i < 3; ++i) benchmark::DoNotOptimize(f_path(J(psi), i));
}
BENCHMARK(BM_PathIntertwining)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
