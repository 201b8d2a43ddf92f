// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "pstruct/newton.hpp"

using namespace pstruct;

namespace {

PDeltaParams params(double p, double delta, double mu = 1.0) {
  PDeltaParams prm;
  prm.p = p;
  prm.delta = delta;
  prm.mu = mu;
  prm.delta0 = std::fmax(2.0, delta);
  return prm;
}

double max_nodal_gap(const DiscreteField& a, const DiscreteField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    m = std::fmax(m, std::fabs(a.values[i] - b.values[i]));
  return m;
}

}  // namespace

TEST_CASE("quadratic law converges in one Newton step") {
  const Mesh mesh = build_mesh(DomainSpec::unit_square(), 3);
  const StressModel m = StressModel::canonical(params(2.0, 0.0, 2.0));
  const std::vector<double> b = load_vector(mesh, named_source("sine-load"));
  NewtonReport rep;
  const DiscreteField u = newton_solve(m, b, DiscreteField(mesh), {}, &rep);
  CHECK(rep.iterations == 1);
  CHECK(rep.residual_norm < 1e-10 * (1.0 + norm2(b)));
  CHECK(u.max_boundary_abs() == 0.0);
  REQUIRE(rep.energy_history.size() == 2);
  CHECK(rep.energy_history[1] < rep.energy_history[0]);
}

TEST_CASE("zero load yields the zero solution without iterating") {
  const Mesh mesh = build_mesh(DomainSpec::unit_disk(), 2);
  const StressModel m = StressModel::canonical(params(1.6, 0.2));
  const std::vector<double> b(2 * mesh.n_nodes(), 0.0);
  NewtonReport rep;
  const DiscreteField u = newton_solve(m, b, DiscreteField(mesh), {}, &rep);
  CHECK(rep.iterations == 0);
  CHECK(norm2(u.values) == 0.0);
}

TEST_CASE("the minimizer is independent of the starting point") {
  const Mesh mesh = build_mesh(DomainSpec::unit_square(), 2);
  const StressModel m = StressModel::canonical(params(1.5, 0.1, 1.2));
  const std::vector<double> b = load_vector(mesh, named_source("const-x"));
  const DiscreteField a = newton_solve(m, b, DiscreteField(mesh));
  DiscreteField init = interpolate(mesh, named_solution("sine-2"));
  init.zero_boundary();
  const DiscreteField c = newton_solve(m, b, std::move(init));
  CHECK(max_nodal_gap(a, c) < 10.0 * 1e-10 * (1.0 + norm2(b)));
}

TEST_CASE("iteration cap raises the documented error") {
  const Mesh mesh = build_mesh(DomainSpec::unit_square(), 2);
  const StressModel m = StressModel::canonical(params(1.5, 0.1));
  const std::vector<double> b = load_vector(mesh, named_source("const-y"));
  NewtonOptions opt;
  opt.max_iter = 1;
  opt.tol = 1e-14;
  CHECK_THROWS_AS(newton_solve(m, b, DiscreteField(mesh), opt), MaxIterExceededError);
}

TEST_CASE("default continuation schedule shape") {
  // shifted or quadratic laws need no continuation
  CHECK(default_schedule(params(1.5, 0.3)).size() == 1);
  CHECK(default_schedule(params(2.0, 0.0)).size() == 1);
  CHECK(default_schedule(params(1.5, 0.3)).front().eps == 0.0);
  CHECK(default_schedule(params(1.5, 0.3)).front().kappa == 0.0);
  // degenerate laws get the perturbation-then-shift cascade
  const auto sched = default_schedule(params(1.5, 0.0));
  REQUIRE(sched.size() >= 5);
  CHECK(sched.front().eps > 0.0);
  CHECK(sched.back().eps == 0.0);
  CHECK(sched.back().kappa == 1e-5);
  for (std::size_t i = 1; i < sched.size(); ++i) {
    CHECK(sched[i].eps <= sched[i - 1].eps);
    CHECK(sched[i].kappa <= sched[i - 1].kappa);
  }
}

TEST_CASE("stage models pick the right law variant") {
  const PDeltaParams prm = params(1.5, 0.0);
  CHECK(stage_model(prm, {0.0, 0.0}).eps() == 0.0);
  CHECK(stage_model(prm, {0.0, 0.0}).shift() == 0.0);
  CHECK(stage_model(prm, {0.1, 0.0}).eps() == 0.1);
  CHECK(stage_model(prm, {0.0, 0.01}).shift() == 0.01);
  const StressModel both = stage_model(prm, {0.1, 0.01});
  CHECK(both.eps() == 0.1);
  CHECK(both.shift() == 0.01);
}

TEST_CASE("continuation agrees with the direct solve for a shifted law") {
  const Mesh mesh = build_mesh(DomainSpec::unit_square(), 2);
  const PDeltaParams prm = params(1.5, 0.1);
  const std::vector<double> b = load_vector(mesh, named_source("const-x"));
  const DiscreteField direct = newton_solve(StressModel::canonical(prm), b, DiscreteField(mesh));
  const std::vector<ContinuationStage> sched{{1e-2, 0.0}, {1e-4, 0.0}, {0.0, 0.0}};
  ContinuationReport rep;
  const DiscreteField cont = continuation_solve(prm, b, DiscreteField(mesh), sched, {}, &rep);
  CHECK(max_nodal_gap(direct, cont) < 1e-8);
  REQUIRE(rep.stages.size() == 3);
  REQUIRE(rep.apriori.size() == 3);
  REQUIRE(rep.phi_mass.size() == 3);
  REQUIRE(rep.iterations.size() == 3);
  REQUIRE(rep.energy.size() == 3);
  CHECK(rep.kappa_final == 0.0);
  // the perturbation bound decays monotonically up to 1% slack
  for (std::size_t i = 1; i < rep.apriori.size(); ++i)
    CHECK(rep.apriori[i] <= 1.01 * rep.apriori[i - 1]);
  // warm starts: later stages take fewer steps than the first
  CHECK(rep.iterations[2] <= rep.iterations[0]);
}

TEST_CASE("degenerate law runs the shift cascade and stabilizes") {
  const Mesh mesh = build_mesh(DomainSpec::unit_square(), 2);
  const PDeltaParams prm = params(1.5, 0.0);
  const std::vector<double> b = load_vector(mesh, named_source("const-x"));
  ContinuationReport rep;
  const DiscreteField u =
      continuation_solve(prm, b, DiscreteField(mesh), default_schedule(prm), {}, &rep);
  CHECK(norm2(u.values) > 0.0);
  CHECK(u.max_boundary_abs() == 0.0);
  CHECK(rep.kappa_final == 1e-5);
  CHECK(rep.stabilization_rel < 0.02);
  CHECK(rep.stabilization_rel > 0.0);
  for (std::size_t i = 1; i < rep.apriori.size(); ++i)
    CHECK(rep.apriori[i] <= 1.01 * rep.apriori[i - 1]);
  for (double pm : rep.phi_mass) CHECK(pm > 0.0);
}

TEST_CASE("continuation rejects an empty schedule") {
  const Mesh mesh = build_mesh(DomainSpec::unit_square(), 1);
  const std::vector<double> b(2 * mesh.n_nodes(), 0.0);
  CHECK_THROWS_AS(
      continuation_solve(params(1.5, 0.1), b, DiscreteField(mesh), {}, {}, nullptr),
      std::invalid_argument);
}

TEST_CASE("energy decreases along accepted Newton steps") {
  const Mesh mesh = build_mesh(DomainSpec::unit_disk(), 2);
  const StressModel m = StressModel::canonical(params(1.3, 0.05, 1.5));
  const std::vector<double> b = load_vector(mesh, named_source("sine-load"));
  NewtonReport rep;
  newton_solve(m, b, DiscreteField(mesh), {}, &rep);
  REQUIRE(rep.energy_history.size() >= 2);
  for (std::size_t i = 1; i < rep.energy_history.size(); ++i)
    CHECK(rep.energy_history[i] <
          rep.energy_history[i - 1] + 1e-13 * (1.0 + std::fabs(rep.energy_history[i - 1])));
}
