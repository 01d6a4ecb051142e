#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>

#include "lensattack/attack_model.hpp"
#include "lensattack/defense.hpp"
#include "lensattack/image_sim.hpp"

using namespace lensattack;

namespace {

RasterImage noise_image(int size) {
  std::mt19937 rng(7);
  RasterImage img(size, size, 1);
  for (auto& p : img.pixels()) p = static_cast<std::uint8_t>(rng() & 0xff);
  return img;
}

SweepGrid grid(int per_axis) {
  SweepGrid g;
  for (int i = 0; i < per_axis; ++i) {
    g.focal_lengths.push_back(-1.0 + 1.9 * i / per_axis + 0.05);
    g.gaps.push_back(0.01 + 0.5 * i / per_axis);
    g.object_distances.push_back(2.0 + 18.0 * i / per_axis);
  }
  return g;
}

void BM_Sweep(benchmark::State& state) {
  const SweepGrid g = grid(static_cast<int>(state.range(0)));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(g, threads));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) * state.range(0));
}
BENCHMARK(BM_Sweep)->Args({12, 1})->Args({40, 1})->Args({40, 4});

void BM_Resample(benchmark::State& state) {
  const auto img = noise_image(static_cast<int>(state.range(0)));
  const double c = (state.range(0) - 1) / 2.0;
  for (auto _ : state) benchmark::DoNotOptimize(radial_resample(img, CircleRegion{c, c, c * 0.8}, 1.25));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_Resample)->Arg(256)->Arg(1024);

void BM_Blur(benchmark::State& state) {
  const auto img = noise_image(512);
  const double sigma = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(defocus_blur(img, FullRegion{}, sigma));
}
BENCHMARK(BM_Blur)->Arg(1)->Arg(4)->Arg(12);

void BM_VarLapTiles(benchmark::State& state) {
  const auto img = noise_image(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tiled_blur_map(img, kDefaultTileSize));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_VarLapTiles)->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
