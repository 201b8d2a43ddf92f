// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#include "pstruct/newton.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>
#include <cmath>
#include <limits>
#include <string>

#include "pstruct/errors.hpp"

namespace pstruct {
namespace {

std::vector<double> solve_linear(const Eigen::SparseMatrix<double>& jac,
                                 const std::vector<double>& rhs, bool* used_cg) {
  const Eigen::Map<const Eigen::VectorXd> b(rhs.data(), static_cast<Eigen::Index>(rhs.size()));
  Eigen::VectorXd x;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(jac);
  if (ldlt.info() == Eigen::Success) {
    x = ldlt.solve(b);
  }
  if (ldlt.info() != Eigen::Success || !x.allFinite()) {
    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg(jac);
    cg.setTolerance(1e-13);
    cg.setMaxIterations(20 * jac.rows());
    x = cg.solve(b);
    if (used_cg) *used_cg = true;
    if (cg.info() != Eigen::Success || !x.allFinite())
      throw DefinitenessLostError("tangent system could not be solved");
  }
  return {x.data(), x.data() + x.size()};
}

}  // namespace

DiscreteField newton_solve(const StressModel& m, const std::vector<double>& load,
                           DiscreteField init, const NewtonOptions& opt, NewtonReport* report) {
  DiscreteField u = std::move(init);
  u.zero_boundary();
  const double scale = 1.0 + norm2(load);
  const double target = opt.tol * scale;

  std::vector<double> r = assemble_residual(m, u, load);
  double rn = norm2(r);
  double e = energy(m, u, load);
  NewtonReport rep;
  rep.energy_history.push_back(e);

  while (rn > target) {
    if (rep.iterations >= opt.max_iter)
      throw MaxIterExceededError("Newton did not reach tolerance in " +
                                 std::to_string(opt.max_iter) +
                                 " steps (residual " + std::to_string(rn) + ")");
    const Eigen::SparseMatrix<double> jac = assemble_jacobian(m, u);
    std::vector<double> rhs(r.size());
    for (std::size_t k = 0; k < r.size(); ++k) rhs[k] = -r[k];
    const std::vector<double> d = solve_linear(jac, rhs, &rep.used_cg_fallback);
    const double slope = dot(r, d);
    if (!(slope < 0.0))
      throw DefinitenessLostError("tangent direction is not a descent direction");

    double alpha = 1.0;
    DiscreteField trial = u;
    for (;;) {
      for (std::size_t k = 0; k < trial.values.size(); ++k)
        trial.values[k] = u.values[k] + alpha * d[k];
      trial.zero_boundary();
      const double et = energy(m, trial, load);
      // The rounding allowance keeps the test passable once the true decrease
      // per step falls below the precision of the energy itself.
      const double noise =
          16.0 * std::numeric_limits<double>::epsilon() * (std::fabs(e) + std::fabs(et));
      if (std::isfinite(et) && et <= e + opt.armijo_c * alpha * slope + noise) break;
      alpha *= 0.5;
      if (alpha < opt.alpha_min)
        throw LineSearchStalledError("line search stalled at step length " +
                                     std::to_string(alpha));
    }
    u = std::move(trial);
    e = energy(m, u, load);
    r = assemble_residual(m, u, load);
    rn = norm2(r);
    ++rep.iterations;
    rep.energy_history.push_back(e);
  }
  rep.residual_norm = rn;
  if (report) *report = rep;
  return u;
}

StressModel stage_model(const PDeltaParams& prm, const ContinuationStage& st) {
  if (st.kappa > 0.0 && st.eps > 0.0) return StressModel::eps_kappa(prm, st.eps, st.kappa);
  if (st.kappa > 0.0) return StressModel::kappa_regularized(prm, st.kappa);
  if (st.eps > 0.0) return StressModel::eps_perturbed(prm, st.eps);
  return StressModel::canonical(prm);
}

std::vector<ContinuationStage> default_schedule(const PDeltaParams& prm) {
  prm.validate();
  if (prm.delta > 0.0 || prm.p == 2.0) return {{0.0, 0.0}};
  // The canonical law with delta = 0 and p < 2 has an unbounded tangent at
  // zero strain: first shrink the linear perturbation at a fixed shift,
  // then shrink the shift.
  return {{1e-2, 1e-1}, {1e-4, 1e-1}, {0.0, 1e-1}, {0.0, 1e-2},
          {0.0, 1e-3}, {0.0, 1e-4},  {0.0, 1e-5}};
}

namespace {

double phi_mass_quantity(const PDeltaParams& effective, const DiscreteField& u) {
  const Mesh& mesh = u.mesh();
  double pot = 0.0;
  for (int e = 0; e < mesh.n_elements(); ++e)
    pot += mesh.areas[e] * phi(effective, u.sym_grad_on(e).norm());
  return pot;
}

double grad_mass(const DiscreteField& u) {
  const Mesh& mesh = u.mesh();
  double grad2 = 0.0;
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const MatD j = u.gradient_on(e);
    grad2 += mesh.areas[e] * j.norm() * j.norm();
  }
  return grad2;
}

}  // namespace

DiscreteField continuation_solve(const PDeltaParams& prm, const std::vector<double>& load,
                                 DiscreteField init, const std::vector<ContinuationStage>& schedule,
                                 const NewtonOptions& opt, ContinuationReport* report) {
  prm.validate();
  if (schedule.empty()) throw std::invalid_argument("continuation_solve: empty schedule");
  ContinuationReport rep;
  DiscreteField u = std::move(init);
  double prev_pm = -1.0;
  for (const ContinuationStage& st : schedule) {
    const StressModel m = stage_model(prm, st);
    NewtonReport nr;
    u = newton_solve(m, load, std::move(u), opt, &nr);
    const double pm = phi_mass_quantity(m.effective(), u);
    rep.stages.push_back(st);
    rep.iterations.push_back(nr.iterations);
    rep.apriori.push_back(st.eps * grad_mass(u) + pm);
    rep.phi_mass.push_back(pm);
    rep.energy.push_back(nr.energy_history.back());
    rep.kappa_final = st.kappa;
    if (st.eps == 0.0) {
      if (prev_pm > 0.0) rep.stabilization_rel = std::fabs(pm - prev_pm) / prev_pm;
      prev_pm = pm;
    }
  }
  if (report) *report = rep;
  return u;
}

}  // namespace pstruct
