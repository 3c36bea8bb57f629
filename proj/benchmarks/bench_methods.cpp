#include <benchmark/benchmark.h>

#include "qmcshake/methods.hpp"

using namespace qmcshake;

namespace {

void run(benchmark::State& state, Method m, const Integrand& f) {
  MethodOptions opts;
  opts.seed = 11;
  if (uses_shake(m)) opts.shake.kappa = 0.25;
  const auto budget = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto r = run_method(m, f, budget, opts);
    benchmark::DoNotOptimize(r.estimate);
  }
  state.SetItemsProcessed(state.iterations() *
                          evaluations_for(m, budget, f.dimension));
}

}  // namespace

static void BM_PlainMc(benchmark::State& state) {
  run(state, Method::PlainMc, f2_smooth());
}
BENCHMARK(BM_PlainMc)->RangeMultiplier(8)->Range(1 << 10, 1 << 16);

static void BM_QmcSobol(benchmark::State& state) {
  run(state, Method::QmcSobol, f2_smooth());
}
BENCHMARK(BM_QmcSobol)->RangeMultiplier(8)->Range(1 << 10, 1 << 16);

static void BM_Mss1(benchmark::State& state) {
  run(state, Method::Mss1, f2_smooth());
}
BENCHMARK(BM_Mss1)->RangeMultiplier(8)->Range(1 << 10, 1 << 16);

static void BM_Mss1NonSmooth(benchmark::State& state) {
  run(state, Method::Mss1, f1_nonsmooth());
}
BENCHMARK(BM_Mss1NonSmooth)->RangeMultiplier(8)->Range(1 << 10, 1 << 16);

static void BM_Mss2(benchmark::State& state) {
  run(state, Method::Mss2, f2_smooth());
}
BENCHMARK(BM_Mss2)->DenseRange(4, 12, 4);

static void BM_Mss2s(benchmark::State& state) {
  run(state, Method::Mss2s, f2_smooth());
}
BENCHMARK(BM_Mss2s)->DenseRange(4, 12, 4);

static void BM_OwenQmc(benchmark::State& state) {
  run(state, Method::OwenQmc, f2_smooth());
}
BENCHMARK(BM_OwenQmc)->RangeMultiplier(8)->Range(1 << 10, 1 << 16);
