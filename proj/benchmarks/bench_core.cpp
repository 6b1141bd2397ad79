#include <benchmark/benchmark.h>

#include "permdisc/enumeration.hpp"
#include "permdisc/metrics.hpp"
#include "permdisc/random.hpp"
#include "permdisc/solver.hpp"
#include "permdisc/witness.hpp"

using namespace permdisc;

static void BM_BuildFamilyRecursive(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_family(k));
}
BENCHMARK(BM_BuildFamilyRecursive)->Arg(4)->Arg(8);

static void BM_BuildFamilyTensor(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_family_tensor(k));
}
BENCHMARK(BM_BuildFamilyTensor)->Arg(4)->Arg(8);

static void BM_DiscQuadruple(benchmark::State& state) {
  const auto f = build_family(static_cast<int>(state.range(0)));
  const auto c = sample_coloring(1, 0, f.n);
  for (auto _ : state) benchmark::DoNotOptimize(disc_quadruple(f, c));
}
BENCHMARK(BM_DiscQuadruple)->Arg(3)->Arg(6)->Arg(8);

static void BM_FlipElement(benchmark::State& state) {
  const auto f = build_family(static_cast<int>(state.range(0)));
  auto c = sample_coloring(2, 0, f.n);
  auto profile = prefix_profile(f, c);
  int e = 1;
  for (auto _ : state) {
    flip_element(profile, f, c, e);
    e = e % f.n + 1;
  }
  benchmark::DoNotOptimize(profile);
}
BENCHMARK(BM_FlipElement)->Arg(3)->Arg(6);

static void BM_BuildWitness(benchmark::State& state) {
  const auto f = build_family(static_cast<int>(state.range(0)));
  const auto c = sample_coloring(3, 0, f.n);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_witness(f, c, Side::L, Sign::plus));
}
BENCHMARK(BM_BuildWitness)->Arg(3)->Arg(6)->Arg(8);

static void BM_ExhaustiveMinDisc(benchmark::State& state) {
  const auto f = build_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_min_disc(f));
}
BENCHMARK(BM_ExhaustiveMinDisc)->Arg(1)->Arg(2);

static void BM_DecideInfeasible(benchmark::State& state) {
  const auto f = build_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decide_disc_at_most(f, 1));
}
BENCHMARK(BM_DecideInfeasible)->Arg(2)->Arg(3);

static void BM_GrayEnumeration(benchmark::State& state) {
  const auto f = build_family(2);
  const std::array<std::int8_t, 1> fixed{+1};
  for (auto _ : state) {
    std::uint64_t count = 0;
    for_each_coloring_gray(f, fixed, [&](const Coloring&, const PrefixProfile&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_GrayEnumeration);

BENCHMARK_MAIN();
