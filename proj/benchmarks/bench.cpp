#include <benchmark/benchmark.h>

#include <cstdlib>
#include <random>

#include "mmi/fixture.hpp"
#include "mmi/lattice.hpp"
#include "mmi/ray_series.hpp"
#include "mmi/wall_atlas.hpp"

namespace {

const mmi::IdealTuple& chain10() {
  static const mmi::IdealTuple t = [] {
    setenv("MMI_FIXTURE_DIR", MMI_BENCH_FIXTURE_DIR, 0);
    return mmi::build_tuple(mmi::load_fixture("CHAIN10"));
  }();
  return t;
}

std::vector<mmi::ZDivisor> random_divisors(std::size_t n, std::size_t count) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> coeff(-5, 40);
  std::vector<mmi::ZDivisor> out;
  for (std::size_t i = 0; i < count; ++i) {
    mmi::ZDivisor d(n);
    for (auto& x : d.coeffs) x = coeff(rng);
    out.push_back(d);
  }
  return out;
}

void BM_ClosureUnloading(benchmark::State& state) {
  const auto& g = chain10().graph();
  const auto inputs = random_divisors(g.size(), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mmi::antinef_closure(g, inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_ClosureUnloading);

void BM_ClosureUnitSteps(benchmark::State& state) {
  const auto& g = chain10().graph();
  const auto inputs = random_divisors(g.size(), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mmi::antinef_closure_unit(g, inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_ClosureUnitSteps);

void BM_RayWalk(benchmark::State& state) {
  const mmi::Ray ray(mmi::parse_point("0,101/780"), {1, 1});
  const mmi::Rational bound(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mmi::ray_walk(chain10(), ray, bound));
  }
}
BENCHMARK(BM_RayWalk)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CellDecomposition(benchmark::State& state) {
  const mmi::Rational side(state.range(0), 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mmi::cell_decomposition(chain10(), mmi::Box{side, side}));
  }
}
BENCHMARK(BM_CellDecomposition)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
