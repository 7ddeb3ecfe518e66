#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "bazlab/funclasses.hpp"
#include "bazlab/powseries.hpp"

using namespace bazlab;

namespace {

TruncSeries unit_series(std::size_t order) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> c(order + 1);
  double w = 0.5;
  for (auto& ck : c) {
    ck = {w * u(rng), w * u(rng)};
    w *= 0.9;
  }
  c[0] = 1.0;
  return TruncSeries(std::move(c));
}

}  // namespace

static void BM_mul(benchmark::State& state) {
  const auto a = unit_series(static_cast<std::size_t>(state.range(0)));
  const auto b = unit_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mul(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_mul)->RangeMultiplier(2)->Range(32, 1024)->Complexity(benchmark::oNSquared);

static void BM_pow_alpha(benchmark::State& state) {
  const auto h = unit_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pow_alpha(h, 0.7));
}
BENCHMARK(BM_pow_alpha)->RangeMultiplier(2)->Range(32, 1024);

static void BM_eval_circle(benchmark::State& state) {
  const auto s = unit_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_circle(s, 0.9, 512));
}
BENCHMARK(BM_eval_circle)->RangeMultiplier(2)->Range(32, 1024);

static void BM_eval_pointwise(benchmark::State& state) {
  const auto s = unit_series(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    for (std::size_t j = 0; j < 512; ++j) {
      benchmark::DoNotOptimize(eval(s, std::polar(0.9, 2.0 * M_PI * static_cast<double>(j) / 512.0)));
    }
  }
}
BENCHMARK(BM_eval_pointwise)->RangeMultiplier(2)->Range(32, 1024);

static void BM_membership_grid(benchmark::State& state) {
  const auto f = AnalyticFn::koebe(static_cast<std::size_t>(state.range(0)));
  const auto grid = DiskGrid::standard();
  for (auto _ : state) {
    benchmark::DoNotOptimize(membership(f, ClassId::Starlike, {0, 1.0, 0.0}, grid));
  }
}
BENCHMARK(BM_membership_grid)->Arg(64)->Arg(128)->Arg(512);

BENCHMARK_MAIN();
