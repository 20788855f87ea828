// Serial reference vs OpenMP kernel on the same inputs. Set OMP_NUM_THREADS
// to compare thread counts.

#include "nonsep/cubes.hpp"
#include "nonsep/lattice.hpp"
#include "nonsep/separability.hpp"
#include "nonsep/shapes.hpp"

#include <benchmark/benchmark.h>

#include <algorithm>
#include <cmath>

using namespace nonsep;

namespace {

// Touching chain of n hexagons along a slowly turning path: NS, so every
// split gets tested.
HomotheticFamily hexagon_chain(int n) {
  const auto hex = shapes::regular_polygon(6, 1.0);
  std::vector<Member> ms;
  Vec x = Vec::Zero(2);
  for (int i = 0; i < n; ++i) {
    ms.push_back({x, 1.0});
    const double th = 0.3 * i;
    Vec step(2);
    step << std::cos(th), std::sin(th);
    double gauge = 0.0;
    for (const auto& h : hex.facets()) gauge = std::max(gauge, h.a.dot(step) / h.b);
    x += (2.0 / gauge) * step;
  }
  return {hex, ms};
}

// 3 x 2 x 1 box of unit cubes: 1-WIP, so no sample stops the scan early.
HomotheticFamily cube_block() {
  std::vector<Member> ms;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      Vec x(3);
      x << i, j, 0;
      ms.push_back({x, 1.0});
    }
  }
  return {shapes::cube(3, 0.5), ms};
}

LatticeArrangement chessboard() {
  Mat b(2, 2);
  b << 1, 1, 1, -1;
  return {shapes::cube(2, 0.5), Lattice(b)};
}

void BM_ns_serial(benchmark::State& st) {
  const auto f = hexagon_chain(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(serial::is_ns(f));
}
void BM_ns_parallel(benchmark::State& st) {
  const auto f = hexagon_chain(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(is_ns(f));
}

void BM_kwip_serial(benchmark::State& st) {
  const auto f = cube_block();
  for (auto _ : st) benchmark::DoNotOptimize(serial::is_kwip_sampled(f, 1, st.range(0), 5));
}
void BM_kwip_parallel(benchmark::State& st) {
  const auto f = cube_block();
  for (auto _ : st) benchmark::DoNotOptimize(is_kwip_sampled(f, 1, st.range(0), 5));
}

void BM_cover_grid_serial(benchmark::State& st) {
  const auto a = chessboard();
  for (auto _ : st) benchmark::DoNotOptimize(serial::covering_radius_grid(a, static_cast<int>(st.range(0))));
}
void BM_cover_grid_parallel(benchmark::State& st) {
  const auto a = chessboard();
  for (auto _ : st) benchmark::DoNotOptimize(covering_radius_grid(a, static_cast<int>(st.range(0))));
}

void BM_cubes_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::exhaustive_max(static_cast<int>(st.range(0)), Measure::area));
}
void BM_cubes_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(exhaustive_max(static_cast<int>(st.range(0)), Measure::area));
}

}  // namespace

BENCHMARK(BM_ns_serial)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ns_parallel)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kwip_serial)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_kwip_parallel)->Arg(20000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cover_grid_serial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cover_grid_parallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cubes_serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_cubes_parallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
