#include <random>

#include <benchmark/benchmark.h>

#include "texturematrix/corpus.hpp"
#include "texturematrix/gldv.hpp"
#include "texturematrix/glcm.hpp"
#include "texturematrix/texture_stats.hpp"

namespace {

using namespace texturematrix;

PixelGrid noise(std::size_t side, std::size_t channels) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> level(0, 255);
  std::vector<GreyLevel> values(side * side * channels);
  for (auto& v : values) v = static_cast<GreyLevel>(level(rng));
  return PixelGrid(side, side, channels, std::move(values));
}

void BM_DirectionalGlcm(benchmark::State& state) {
  const PixelGrid image = noise(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(directional_glcm(image, Direction::SE));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(image.values().size()));
}
BENCHMARK(BM_DirectionalGlcm)->Arg(32)->Arg(128)->Arg(512);

void BM_SymmetricGlcm(benchmark::State& state) {
  const PixelGrid image = noise(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_glcm(image, SymmetricAxis::Horizontal));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(image.values().size()));
}
BENCHMARK(BM_SymmetricGlcm)->Arg(32)->Arg(128)->Arg(512);

void BM_ComputeStats(benchmark::State& state) {
  const ProbabilityMatrix p = normalize(symmetric_glcm(noise(128, 3), SymmetricAxis::Vertical));
  for (auto _ : state) benchmark::DoNotOptimize(compute_stats(p));
}
BENCHMARK(BM_ComputeStats);

void BM_GroupGldv(benchmark::State& state) {
  const CooccurrenceMatrix m = symmetric_glcm(noise(128, 3), SymmetricAxis::DiagonalMain);
  for (auto _ : state) benchmark::DoNotOptimize(group_gldv(gldv(m)));
}
BENCHMARK(BM_GroupGldv);

// Three axes of a 128x128 RGB image: GLCM, normalization, statistics, groups.
void BM_FullPipeline(benchmark::State& state) {
  const PixelGrid image = noise(128, 3);
  for (auto _ : state) {
    for (SymmetricAxis axis : kReportAxes) benchmark::DoNotOptimize(analyze_axis(image, axis));
  }
}
BENCHMARK(BM_FullPipeline)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
