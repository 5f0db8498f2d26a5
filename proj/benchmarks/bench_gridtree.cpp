#include <benchmark/benchmark.h>


#include "gridtree/perfect.hpp"
#include "gridtree/reduction.hpp"
#include "gridtree/solver.hpp"
#include "gridtree/verify.hpp"

namespace {

using namespace gridtree;

void BM_BuildTile(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_tile(TileKind::F, k));
  state.SetItemsProcessed(state.iterations() * ((int64_t{2} << k) - 1));
}
BENCHMARK(BM_BuildTile)->DenseRange(5, 13, 2)->Unit(benchmark::kMillisecond);

void BM_VerifyPlanar(benchmark::State& state, PlanarityMethod method) {
  const auto d = embed_perfect(static_cast<int>(state.range(0)));
  const auto side = tile_side(static_cast<int>(state.range(0)));
  VerifyOptions opts;
  opts.planarity = method;
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify(d.tree, d.embedding, {side, side}, {Check::Planar}, opts));
  }
  state.SetComplexityN(static_cast<int64_t>(d.tree.size()));
}
BENCHMARK_CAPTURE(BM_VerifyPlanar, naive, PlanarityMethod::Naive)
    ->DenseRange(5, 11, 2)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNSquared);
BENCHMARK_CAPTURE(BM_VerifyPlanar, bucketed, PlanarityMethod::Bucketed)
    ->DenseRange(5, 13, 2)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oN);

void BM_VerifyAllChecks(benchmark::State& state) {
  const auto d = embed_perfect_with_parent(static_cast<int>(state.range(0)));
  const auto side = tile_side(static_cast<int>(state.range(0)));
  const CheckSet checks{Check::Injective, Check::Bounds, Check::Planar, Check::Rotation,
                        Check::EdgeThroughVertex, Check::Occupancy};
  for (auto _ : state) benchmark::DoNotOptimize(verify(d.tree, d.embedding, {side, side}, checks));
}
BENCHMARK(BM_VerifyAllChecks)->DenseRange(5, 11, 2)->Unit(benchmark::kMillisecond);

void BM_ReduceEncode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::vector<int>> clauses;
  // Clauses satisfied by the all-true assignment.
  for (int j = 0; j < n; ++j) clauses.push_back({1 + j % n, -(1 + (j + 1) % n), 1 + (j + 2) % n});
  const auto f = make_formula(n, clauses);
  const Assignment all_true{std::vector<bool>(static_cast<std::size_t>(n), true)};
  for (auto _ : state) {
    const auto r = reduce(f);
    benchmark::DoNotOptimize(encode_embedding(r, all_true));
  }
}
BENCHMARK(BM_ReduceEncode)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

void BM_SolveCount(benchmark::State& state) {
  const auto t = perfect_binary_tree(2);
  SolveOptions opts;
  opts.mode = static_cast<SolveMode>(state.range(0));
  opts.count_all = true;
  for (auto _ : state) benchmark::DoNotOptimize(solve(t, {4, 3}, opts));
}
BENCHMARK(BM_SolveCount)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
