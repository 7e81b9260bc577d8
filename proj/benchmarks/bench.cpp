#include <benchmark/benchmark.h>

#include "nivat/complexity.hpp"
#include "nivat/laurent.hpp"
#include "nivat/source.hpp"

using namespace nivat;

namespace {

ConfigurationSource thue_morse_layer() {
  return ConfigurationSource::layer(
      Vec2{0, 1},
      Sequence1D::substitution({{0, {0, 1}}, {1, {1, 0}}}, 0));
}

void bm_hull(benchmark::State& state) {
  i64 r = state.range(0);
  std::vector<Vec2> pts;
  for (i64 x = -r; x <= r; ++x)
    for (i64 y = -r; y <= r; ++y)
      if (x * x + y * y <= r * r) pts.push_back({x, y});
  for (auto _ : state) {
    auto h = ConvexLatticeSet::hull(pts);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(bm_hull)->Arg(8)->Arg(32)->Arg(64);

void bm_census_rect(benchmark::State& state) {
  auto src = thue_morse_layer();
  i64 n = state.range(0);
  for (auto _ : state) {
    auto c = census(src, rect(n, n), Sampling::Radius(64));
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(bm_census_rect)->Arg(2)->Arg(4)->Arg(6);

void bm_annihilator(benchmark::State& state) {
  auto src = ConfigurationSource::doubly_periodic(
      {3, 0}, {0, 2}, {{1, 2, 3}, {4, 5, 6}});
  for (auto _ : state) {
    auto a = find_affine_annihilator(src, rect(3, 2), 10);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(bm_annihilator);

}  // namespace

BENCHMARK_MAIN();
