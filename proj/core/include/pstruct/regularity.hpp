// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_REGULARITY_HPP
#define PSTRUCT_REGULARITY_HPP

#include <string>
#include <vector>

#include "pstruct/chart.hpp"
#include "pstruct/fem.hpp"
#include "pstruct/newton.hpp"

namespace pstruct {

/// Element-constant nonlinear strain transform F(sym grad u_h).
std::vector<SymTensor> f_field(const StressModel& m, const DiscreteField& u);

/// Area-weighted node lifting of element-constant tensors: each node
/// averages its incident elements, weighted by area. Exact for element
/// samples of affine fields at nodes whose element star is point-symmetric
/// (structured interior patches).
std::vector<SymTensor> lift_to_nodes(const Mesh& mesh, const std::vector<SymTensor>& per_element);

/// || F(sym grad u_h) ||_{L^2} with the canonical base law.
double f_l2_norm(const PDeltaParams& prm, const DiscreteField& u);

/// L^2 norm of the gradient of the node-lifted F field (piecewise linear,
/// so the gradient is element-constant).
double grad_f_l2_norm(const PDeltaParams& prm, const DiscreteField& u);

/// L^q norm of the gradient of the node-lifted symmetric gradient, with the
/// natural second-order exponent q = 3p/(p+1).
double second_gradient_indicator(const PDeltaParams& prm, const DiscreteField& u);

/// Localized decomposition of the squared F-gradient mass:
///   interior    integral xi_0^2 |grad F|^2        (interior cutoff)
///   tangential  sum_P integral xi_P^2 |d_tau F|^2 (graph direction)
///   normal      sum_P integral xi_P^2 |d_n F|^2   (chart normal)
/// tau = t + a' n is not unit, so interior + tangential + normal deviates
/// from the xi^2-weighted total by at most (r + r^2) of it, r = slope bound.
struct BoundarySplit {
  double interior = 0.0;
  double tangential = 0.0;
  double normal = 0.0;
  double weighted_total = 0.0;  // integral (xi_0^2 + sum xi_P^2) |grad F|^2
  double consistency_rel = 0.0; // |interior+tangential+normal - weighted_total| / total
  // Range of xi_0^2 + sum xi_P^2 over quadrature points. The plateau and
  // the half boxes cover the domain and each carries cutoff value 1, so the
  // minimum is at least 1; the maximum records the overlap.
  double cover_min = 0.0;
  double cover_max = 0.0;
};

BoundarySplit boundary_split(const PDeltaParams& prm, const DiscreteField& u,
                             const std::vector<Chart>& charts, const Chart& interior);

/// Pointwise containment of the stress-Jacobian quadratic form ratios on
/// actual field data: for every adjacent element pair, Q = mean symmetric
/// gradient and dQ = jump. Ratios and their analytic windows (law with
/// eps = 0, shift delta'):
///   P / (phi''(|Q|) |dQ|^2)        in [mu, mu/(p-1)]
///   P / |DF(Q)[dQ]|^2              in [4 mu (p-1)/p^2, mu]
///   P phi''(|Q|) / |DS(Q)[dQ]|^2   in [(p-1)/mu, 1/mu]
/// Windows carry a 1e-9 relative guard; jumps below 1e-12 at zero shift are
/// skipped and counted.
struct FieldCheckResult {
  long checked = 0;
  long outliers = 0;
  long skipped = 0;
  std::array<double, 3> ratio_min{};
  std::array<double, 3> ratio_max{};
  double outlier_fraction() const {
    return checked > 0 ? static_cast<double>(outliers) / static_cast<double>(checked) : 0.0;
  }
};

FieldCheckResult field_window_check(const StressModel& m, const DiscreteField& u);

/// One row of a refinement study: solve on one level, run the diagnostics.
struct RegularityRow {
  int level = 0;
  double h_max = 0.0;
  int n_elements = 0;
  double energy = 0.0;
  double f_norm = 0.0;
  double grad_f_norm = 0.0;
  double w2q = 0.0;
  double interior = 0.0;
  double tangential = 0.0;
  double normal = 0.0;
  double split_consistency = 0.0;
  double cover_min = 0.0;
  double load_dual = 0.0;  // ||f||_{p'}
  double delta = 0.0;
  double kappa_final = 0.0;
  int newton_iters = 0;
  double stabilization_rel = 0.0;
  double outlier_fraction = 0.0;
};

struct RegularityOptions {
  std::vector<int> levels{2, 3, 4};
  double r_max = 0.5;
  NewtonOptions newton;
  std::vector<double> load_scales{1.0, 2.0, 4.0};  // growth sweep on finest level
  std::vector<double> delta_sweep{0.01, 0.1, 1.0}; // recorded, never asserted
};

struct RegularityStudy {
  std::vector<RegularityRow> rows;        // one per level
  std::vector<double> sweep_scales;       // load factors on the finest level
  std::vector<double> sweep_grad_f;       // grad F norm per factor
  bool sweep_monotone = true;             // grad F non-decreasing in the load
                                          // scale, up to 1% slack
  std::vector<RegularityRow> delta_rows;  // finest level, swept delta
};

/// Solves the Dirichlet problem per level via warm-started continuation and
/// collects the regularity diagnostics. Requires a domain with a C^2
/// boundary. delta-sweep rows replace the law's delta and re-solve on the
/// finest level.
RegularityStudy refinement_study(const PDeltaParams& prm, const DomainSpec& domain,
                                 const VectorField& load, const RegularityOptions& opt);

/// Single-level study row (shared by the driver and the full study).
RegularityRow regularity_row(const PDeltaParams& prm, const Mesh& mesh, const VectorField& load,
                             const std::vector<Chart>& charts, const Chart& interior,
                             const NewtonOptions& nopt, DiscreteField* solution_out = nullptr);

}  // namespace pstruct

#endif
