// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_NEWTON_HPP
#define PSTRUCT_NEWTON_HPP

#include <vector>

#include "pstruct/fem.hpp"

namespace pstruct {

struct NewtonOptions {
  double tol = 1e-10;       // residual norm, relative to 1 + load norm
  int max_iter = 60;
  double armijo_c = 1e-4;   // sufficient-decrease constant
  double alpha_min = 1e-14; // line search gives up below this step
};

struct NewtonReport {
  int iterations = 0;
  double residual_norm = 0.0;
  bool used_cg_fallback = false;
  std::vector<double> energy_history;  // energy at start and after each accepted step
};

/// Damped Newton iteration on the discrete energy with Armijo backtracking
/// on the true energy. Linear solves use sparse LDLT with a conjugate
/// gradient fallback. Throws MaxIterExceededError, LineSearchStalledError,
/// or DefinitenessLostError (non-descent tangent direction); DegenerateError
/// propagates from assembly.
DiscreteField newton_solve(const StressModel& m, const std::vector<double>& load,
                           DiscreteField init, const NewtonOptions& opt = {},
                           NewtonReport* report = nullptr);

/// One continuation stage: solve with perturbation eps and shift kappa.
/// kappa = 0 keeps the law canonical; kappa > 0 regularizes the shift.
struct ContinuationStage {
  double eps = 0.0;
  double kappa = 0.0;
};

/// eps-then-kappa cascade used when the base law has delta = 0 and p < 2;
/// a single canonical stage otherwise.
std::vector<ContinuationStage> default_schedule(const PDeltaParams& prm);

struct ContinuationReport {
  std::vector<ContinuationStage> stages;
  std::vector<int> iterations;    // Newton steps per stage
  std::vector<double> apriori;    // eps |grad u|_2^2 + integral phi(|Du|), per stage
  std::vector<double> phi_mass;   // integral phi(|Du|) with the stage-effective shift
  std::vector<double> energy;     // stage-final energy
  double kappa_final = 0.0;
  double stabilization_rel = 0.0;  // relative change of phi_mass over the
                                   // last two perturbation-free stages
};

/// Warm-started continuation through the schedule on a fixed mesh. Each
/// stage starts from the previous solution; the a priori quantity uses the
/// stage-effective N-function and must not grow while the perturbation
/// shrinks (checked by tests with 1% slack, not enforced here).
DiscreteField continuation_solve(const PDeltaParams& prm, const std::vector<double>& load,
                                 DiscreteField init,
                                 const std::vector<ContinuationStage>& schedule,
                                 const NewtonOptions& opt = {},
                                 ContinuationReport* report = nullptr);

/// Builds the stage law from base parameters.
StressModel stage_model(const PDeltaParams& prm, const ContinuationStage& st);

}  // namespace pstruct

#endif
