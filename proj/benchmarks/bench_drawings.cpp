#include <benchmark/benchmark.h>

#include "rookdraw/generators.hpp"
#include "rookdraw/incremental.hpp"
#include "rookdraw/pipeline.hpp"
#include "rookdraw/schnyder.hpp"
#include "rookdraw/triangles.hpp"
#include "rookdraw/verify.hpp"

namespace rd = rookdraw;

static void BM_SchnyderDrawing(benchmark::State& state) {
  auto emb = rd::gen_random_triangulation(static_cast<int>(state.range(0)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(rd::nonaligned_schnyder_drawing(emb));
}
BENCHMARK(BM_SchnyderDrawing)->Arg(20)->Arg(50)->Arg(100);

static void BM_IncrementalNonAligned(benchmark::State& state) {
  auto emb = rd::gen_random_triangulation(static_cast<int>(state.range(0)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(rd::nonaligned_incremental_drawing(emb));
}
BENCHMARK(BM_IncrementalNonAligned)->Arg(20)->Arg(50)->Arg(100);

static void BM_ClassifyTriangles(benchmark::State& state) {
  auto emb = rd::gen_random_triangulation(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(rd::classify_triangles(emb));
}
BENCHMARK(BM_ClassifyTriangles)->Arg(50)->Arg(150);

static void BM_CheckPlanar(benchmark::State& state) {
  auto emb = rd::gen_random_triangulation(static_cast<int>(state.range(0)), 7);
  auto d = rd::nonaligned_schnyder_drawing(emb);
  for (auto _ : state) benchmark::DoNotOptimize(rd::check_planar(d));
}
BENCHMARK(BM_CheckPlanar)->Arg(50)->Arg(100);

static void BM_RookWithBends(benchmark::State& state) {
  auto emb = rd::gen_apollonian(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(rd::rook_with_bends(emb));
}
BENCHMARK(BM_RookWithBends)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
