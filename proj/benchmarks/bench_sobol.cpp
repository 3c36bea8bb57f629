#include <vector>

#include <benchmark/benchmark.h>

#include "qmcshake/net.hpp"
#include "qmcshake/scramble.hpp"
#include "qmcshake/sobol.hpp"

using namespace qmcshake;

static void BM_SobolNext(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  SobolGenerator gen(DirectionTable::shipped(), d);
  std::vector<double> x(d);
  for (auto _ : state) {
    if (gen.index() + 1 >= gen.capacity()) gen.seek(0);
    gen.next(x);
    benchmark::DoNotOptimize(x.data());
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SobolNext)->Arg(4)->Arg(16)->Arg(64);

static void BM_SobolGenerate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto ps = generate(4, n);
    benchmark::DoNotOptimize(ps);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SobolGenerate)->RangeMultiplier(8)->Range(1 << 10, 1 << 19);

static void BM_OwenScramble(benchmark::State& state) {
  const auto ps = generate(4, static_cast<std::size_t>(state.range(0)));
  ScrambleSpec spec{.seed = 7, .digits = 32};
  for (auto _ : state) {
    auto out = owen_scramble(ps, spec);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OwenScramble)->RangeMultiplier(8)->Range(1 << 10, 1 << 16);

static void BM_MinDistance(benchmark::State& state) {
  const auto ps = generate(4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(min_pairwise_distance(ps));
}
BENCHMARK(BM_MinDistance)->RangeMultiplier(4)->Range(1 << 8, 1 << 14);

static void BM_NetCheck(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const auto ps = generate(4, std::size_t{1} << m);
  for (auto _ : state) benchmark::DoNotOptimize(check_net_property(ps, 3, m));
}
BENCHMARK(BM_NetCheck)->DenseRange(8, 14, 2);
