// Macrobenchmarks for the discrete layer: residual and Jacobian assembly on
// refined meshes and a full damped Newton solve.

#include <benchmark/benchmark.h>

#include <vector>

#include "pstruct/fem.hpp"
#include "pstruct/fields.hpp"
#include "pstruct/mesh.hpp"
#include "pstruct/newton.hpp"
#include "pstruct/stress.hpp"

using namespace pstruct;

namespace {

PDeltaParams bench_params() {
  PDeltaParams prm;
  prm.p = 1.5;
  prm.delta = 0.1;
  return prm;
}

void BM_ResidualAssembly(benchmark::State& state) {
  const Mesh mesh = build_mesh(DomainSpec::unit_square(), static_cast<int>(state.range(0)));
  const StressModel m = StressModel::canonical(bench_params());
  const std::vector<double> b = load_vector(mesh, named_source("sine-load"));
  DiscreteField u(mesh);
  for (int k = 0; k < mesh.n_nodes(); ++k)
    if (!mesh.on_boundary[k]) u.set_node(k, {0.01 * (k % 7), 0.01 * (k % 5)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_residual(m, u, b));
  }
  state.SetLabel(std::to_string(mesh.n_elements()) + " elements");
}
BENCHMARK(BM_ResidualAssembly)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_JacobianAssembly(benchmark::State& state) {
  const Mesh mesh = build_mesh(DomainSpec::unit_square(), static_cast<int>(state.range(0)));
  const StressModel m = StressModel::canonical(bench_params());
  DiscreteField u(mesh);
  for (int k = 0; k < mesh.n_nodes(); ++k)
    if (!mesh.on_boundary[k]) u.set_node(k, {0.01 * (k % 7), 0.01 * (k % 5)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_jacobian(m, u));
  }
  state.SetLabel(std::to_string(mesh.n_elements()) + " elements");
}
BENCHMARK(BM_JacobianAssembly)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_NewtonSolve(benchmark::State& state) {
  const Mesh mesh = build_mesh(DomainSpec::unit_square(), static_cast<int>(state.range(0)));
  const StressModel m = StressModel::canonical(bench_params());
  const std::vector<double> b = load_vector(mesh, named_source("sine-load"));
  for (auto _ : state) {
    benchmark::DoNotOptimize(newton_solve(m, b, DiscreteField(mesh)));
  }
  state.SetLabel(std::to_string(mesh.n_elements()) + " elements");
}
BENCHMARK(BM_NewtonSolve)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
