#include "compaug/adversarial.hpp"
#include "compaug/augment.hpp"
#include "compaug/linf_path.hpp"
#include "compaug/random_instance.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace compaug;

namespace {

Instance make(int n, int r, int k) {
  RandomInstanceOptions o;
  o.n = n;
  o.r = r;
  o.k = k;
  o.seed = 12345;
  return random_instance(o);
}

void BM_Orient(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> u(-1000000, 1000000);
  std::vector<Point2> p;
  for (int i = 0; i < 3000; ++i) p.emplace_back(Scalar(u(rng), 7), Scalar(u(rng), 3));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(orient(p[i], p[i + 1], p[i + 2]));
    i = (i + 3) % 2997;
  }
}
BENCHMARK(BM_Orient);

void BM_ValidatePlanar(benchmark::State& state) {
  auto in = make(static_cast<int>(state.range(0)), 8, 1);
  for (auto _ : state) benchmark::DoNotOptimize(validate_planar(in.drawings[0]).ok());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ValidatePlanar)->RangeMultiplier(2)->Range(128, 2048)->Complexity();

void BM_SpanningPath(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> u(0, 4096);
  std::vector<GridPoint> pts(state.range(0));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    pts[i].label = static_cast<int>(i);
    pts[i].coords = {Scalar(u(rng)), Scalar(u(rng))};
  }
  for (auto _ : state) benchmark::DoNotOptimize(improve_path(spanning_path(pts), pts).total());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SpanningPath)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_AugmentRandom(benchmark::State& state) {
  auto in = make(static_cast<int>(state.range(0)), 32, 2);
  AugmentOptions opt;
  opt.validate_result = false;
  for (auto _ : state) benchmark::DoNotOptimize(compatible_augment(in, opt).added_vertex_count());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AugmentRandom)->RangeMultiplier(2)->Range(128, 512)->Unit(benchmark::kMillisecond)->Complexity();

void BM_AugmentNested(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  auto nested = generate_nested_instance(16 * r, r, 2, 3);
  AugmentOptions opt;
  opt.validate_result = false;
  for (auto _ : state) {
    auto res = compatible_augment(nested.instance, opt);
    state.counters["added"] = static_cast<double>(res.added_vertex_count());
  }
}
BENCHMARK(BM_AugmentNested)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
