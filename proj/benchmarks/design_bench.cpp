#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "sashiko/sashiko.hpp"

namespace {

sashiko::DesignSpec random_square(int lines, unsigned seed) {
  std::mt19937 rng(seed);
  auto bits = [&] {
    std::string s;
    for (int i = 0; i < lines; ++i) s.push_back(static_cast<char>('0' + (rng() & 1)));
    return sashiko::BitWord::parse(s);
  };
  auto rows = bits();
  return {rows, bits()};
}

void BM_BuildDesign(benchmark::State& state) {
  const auto spec = random_square(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sashiko::build_design(spec));
}
BENCHMARK(BM_BuildDesign)->RangeMultiplier(4)->Range(16, 256);

void BM_Decompose(benchmark::State& state) {
  const auto design = sashiko::build_design(random_square(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(sashiko::decompose(design));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(design.front().size()));
}
BENCHMARK(BM_Decompose)->RangeMultiplier(4)->Range(16, 256);

void BM_DetectSymmetry(benchmark::State& state) {
  const auto design = sashiko::build_design(random_square(static_cast<int>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(sashiko::detect_symmetry(design));
}
BENCHMARK(BM_DetectSymmetry)->RangeMultiplier(4)->Range(16, 256);

void BM_RenderSvg(benchmark::State& state) {
  const auto design = sashiko::build_design(random_square(static_cast<int>(state.range(0)), 4));
  for (auto _ : state) benchmark::DoNotOptimize(sashiko::render_design_svg(design));
}
BENCHMARK(BM_RenderSvg)->RangeMultiplier(4)->Range(16, 64);

}  // namespace
