// Microbenchmarks for the constitutive layer: stress evaluation, its
// directional derivative, the scalar potential, and a full randomized
// ratio-window sweep.

#include <benchmark/benchmark.h>

#include <vector>

#include "pstruct/equivalence.hpp"
#include "pstruct/nfunction.hpp"
#include "pstruct/sampling.hpp"
#include "pstruct/stress.hpp"

using namespace pstruct;

namespace {

PDeltaParams bench_params() {
  PDeltaParams prm;
  prm.p = 1.5;
  prm.delta = 0.1;
  return prm;
}

std::vector<SymTensor> sample_tensors(int n) {
  TensorSampler s(42);
  std::vector<SymTensor> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    SymTensor q = s.unit_sym(3);
    q *= s.magnitude();
    out.push_back(q);
  }
  return out;
}

void BM_StressEval(benchmark::State& state) {
  const StressModel m = StressModel::canonical(bench_params());
  const auto qs = sample_tensors(256);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stress(m, qs[i++ & 255]));
  }
}
BENCHMARK(BM_StressEval);

void BM_StressDeriv(benchmark::State& state) {
  const StressModel m = StressModel::canonical(bench_params());
  const auto qs = sample_tensors(256);
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t k = i++ & 255;
    benchmark::DoNotOptimize(stress_deriv(m, qs[k], qs[(k + 1) & 255]));
  }
}
BENCHMARK(BM_StressDeriv);

void BM_PotentialEval(benchmark::State& state) {
  const PDeltaParams prm = bench_params();
  double t = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi(prm, t));
    t = t < 1e3 ? t * 1.0001 : 1e-6;
  }
}
BENCHMARK(BM_PotentialEval);

void BM_RatioSuite(benchmark::State& state) {
  const PDeltaParams prm = bench_params();
  const long n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(equivalence_suite(prm, n, 7));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_RatioSuite)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
