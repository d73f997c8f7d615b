#include <benchmark/benchmark.h>

#include "torifan/divisor.hpp"
#include "torifan/fan.hpp"
#include "torifan/intersection.hpp"
#include "torifan/mmp.hpp"
#include "torifan/singularity.hpp"
#include "torifan/volume.hpp"

using namespace torifan;

namespace {

Fan xl_minus(int a, int b) {
  Fan f = bundle_over_p1(a, b);
  auto ws = walls(f);
  for (const Wall& w : ws)
    if (w.rays[0] == 1 && w.rays[1] == 2) return flip(f, w);
  throw std::logic_error("missing wall");
}

void BM_MakeFan(benchmark::State& state) {
  std::vector<LatticePoint> rays{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, -1}, {-1, 6, 5}};
  std::vector<std::vector<int>> cones{{0, 1, 2}, {0, 1, 3}, {0, 2, 3},
                                      {1, 2, 4}, {1, 3, 4}, {2, 3, 4}};
  for (auto _ : state) benchmark::DoNotOptimize(make_fan(rays, cones));
}
BENCHMARK(BM_MakeFan);

void BM_Walls(benchmark::State& state) {
  Fan f = bundle_over_p1(6, 5);
  for (auto _ : state) benchmark::DoNotOptimize(walls(f));
}
BENCHMARK(BM_Walls);

void BM_Flip(benchmark::State& state) {
  Fan f = bundle_over_p1(6, 5);
  Wall w = walls(f)[3];
  for (auto _ : state) benchmark::DoNotOptimize(flip(f, w));
}
BENCHMARK(BM_Flip);

void BM_MoriCone(benchmark::State& state) {
  Fan f = xl_minus(6, 5);
  for (auto _ : state) benchmark::DoNotOptimize(mori_cone(f));
}
BENCHMARK(BM_MoriCone);

void BM_NefCone(benchmark::State& state) {
  Fan f = xl_minus(6, 5);
  for (auto _ : state) benchmark::DoNotOptimize(nef_cone(f));
}
BENCHMARK(BM_NefCone);

void BM_AnticanonicalVolume(benchmark::State& state) {
  Fan f = xl_minus(6, 5);
  for (auto _ : state) benchmark::DoNotOptimize(anticanonical_volume(f));
}
BENCHMARK(BM_AnticanonicalVolume);

void BM_TripleProduct(benchmark::State& state) {
  Fan f = bundle_over_p1(6, 5);
  TorusDivisor mk = scale(Rat(-1), canonical_divisor(f));
  TorusDivisor d0 = ray_divisor(f, 3);
  for (auto _ : state) benchmark::DoNotOptimize(triple(f, mk, mk, d0));
}
BENCHMARK(BM_TripleProduct);

void BM_IsTerminal(benchmark::State& state) {
  Fan f = weighted_projective({1, 1, 4, 6});
  for (auto _ : state) benchmark::DoNotOptimize(is_terminal(f));
}
BENCHMARK(BM_IsTerminal);

void BM_TwoRayGame(benchmark::State& state) {
  Fan f = xl_minus(6, 5);
  for (auto _ : state) benchmark::DoNotOptimize(two_ray_game(f));
}
BENCHMARK(BM_TwoRayGame);

}  // namespace

BENCHMARK_MAIN();
