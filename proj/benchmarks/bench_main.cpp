#include <benchmark/benchmark.h>

#include "generators.hpp"
#include "raf/approx.hpp"
#include "raf/caterpillar_dp.hpp"
#include "raf/conflict_hypergraph.hpp"
#include "raf/exact.hpp"
#include "raf/mast.hpp"
#include "raf/pims.hpp"
#include "raf/reduce.hpp"

using namespace raf;

namespace {

std::pair<PhyloTree, PhyloTree> pair_of(std::size_t n, std::size_t moves) {
  testing::Rng rng(n * 131 + moves);
  PhyloTree a = testing::random_tree(n, rng);
  return {a, testing::perturb(a, moves, rng)};
}

void BM_Mast(benchmark::State& state) {
  auto [a, b] = pair_of(static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(mast(a, b).size);
}
BENCHMARK(BM_Mast)->RangeMultiplier(2)->Range(16, 256);

void BM_ConflictHypergraph(benchmark::State& state) {
  auto [a, b] = pair_of(static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(build_conflict_hypergraph(a, b).edge_count());
}
BENCHMARK(BM_ConflictHypergraph)->DenseRange(10, 40, 10);

void BM_Greedy(benchmark::State& state) {
  auto [a, b] = pair_of(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_mast_raf(a, b).size());
}
BENCHMARK(BM_Greedy)->RangeMultiplier(2)->Range(16, 128);

void BM_ExactBnb(benchmark::State& state) {
  auto [a, b] = pair_of(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(mraf_exact(a, b).partition.size());
}
BENCHMARK(BM_ExactBnb)->DenseRange(8, 20, 4)->Unit(benchmark::kMillisecond);

void BM_ExactCoverDp(benchmark::State& state) {
  auto [a, b] = pair_of(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(mraf_exact(a, b, ExactStrategy::CoverDp).partition.size());
}
BENCHMARK(BM_ExactCoverDp)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_SubtreeReduce(benchmark::State& state) {
  auto [a, b] = pair_of(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(subtree_reduce(a, b).steps.size());
}
BENCHMARK(BM_SubtreeReduce)->RangeMultiplier(2)->Range(16, 128);

void BM_ErdosSzekeres(benchmark::State& state) {
  testing::Rng rng(7);
  Permutation pi = testing::random_permutation(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(erdos_szekeres_partition(pi).size());
}
BENCHMARK(BM_ErdosSzekeres)->RangeMultiplier(4)->Range(16, 4096);

void BM_PimsExact(benchmark::State& state) {
  testing::Rng rng(11);
  Permutation pi = testing::random_permutation(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(pims_exact(pi).partition.size());
}
BENCHMARK(BM_PimsExact)->DenseRange(8, 16, 4);

void BM_CaterpillarDp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  testing::Rng rng(n);
  PhyloTree t1 = testing::random_caterpillar(n, rng);
  PhyloTree t2 = testing::perturb(t1, 2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(caterpillar_xp_decide(t1, t2, 3).has_value());
}
BENCHMARK(BM_CaterpillarDp)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
