// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_EQUIVALENCE_HPP
#define PSTRUCT_EQUIVALENCE_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "pstruct/nfunction.hpp"

namespace pstruct {

/// Observed [min, max] of a sampled ratio.
struct RatioWindow {
  double min = std::numeric_limits<double>::infinity();
  double max = -std::numeric_limits<double>::infinity();
  long count = 0;

  void absorb(double r);
  bool valid() const { return count > 0 && min > 0.0 && min <= max; }
  double width() const { return max / min; }
};

/// Sampled ratio windows for one constitutive equivalence, per shift value.
struct RatioReport {
  std::string name;
  double p = 0.0;
  double mu = 0.0;
  std::uint64_t seed = 0;
  int dim = 3;
  long n_per_delta = 0;
  std::vector<double> delta_grid;
  std::vector<RatioWindow> per_delta;
  /// Near-origin sub-window of the delta = 0 row (magnitudes below 1e-3);
  /// recorded for reporting, never asserted.
  RatioWindow origin;

  RatioWindow union_window() const;
  /// Excess of the union window width over the widest single-delta window:
  /// union_width / max_row_width - 1. Small drift means no shift value
  /// unlocks ratio territory beyond the shift-free regime.
  double drift() const;
};

/// Runs the randomized equivalence checks for the law (p, mu) of prm over
/// the shift grid {0, 1e-3, 1e-2, 1e-1, 1, delta0}. Pairs share one sample
/// stream across all shift values. Sampled quantities:
///
///   phi2_t_over_phi1              phi''(t) t / phi'(t), window [p-1, 1]
///   phi1_t_over_phi               phi'(t) t / phi(t),   window [p, 2]
///   power_sum_over_phi_sum        (t^p + delta^p) / (phi(t) + delta^p)
///   stress_gap_pairing_over_f_gap_sq      (S(P)-S(Q)).(P-Q) / |F(P)-F(Q)|^2
///   stress_gap_pairing_over_shifted_phi   ... / phi_{|P|}(|P-Q|)
///   stress_gap_pairing_over_phi2_weighted ... / phi''(|P|+|P-Q|)|P-Q|^2
///   stress_gap_norm_over_shifted_phi1     |S(P)-S(Q)| / phi'_{|P|}(|P-Q|)
///   stress_pairing_over_f_sq              S(Q).Q / |F(Q)|^2
///   f_sq_over_phi                         |F(Q)|^2 / phi(|Q|)
///   pq_over_phi2_weighted                 P(Q,dQ) / phi''(|Q|)|dQ|^2
///   pq_over_df_sq                         P(Q,dQ) / |DF(Q)[dQ]|^2
///   pq_over_ds_sq_scaled                  P(Q,dQ) phi''(|Q|) / |DS(Q)[dQ]|^2
///
/// where P(Q,dQ) is the stress-Jacobian quadratic form. Direction probes
/// aligned with and orthogonal to Q are interleaved so the sampled windows
/// attain the analytic eigenvalue edges.
std::vector<RatioReport> equivalence_suite(const PDeltaParams& prm, long n_samples,
                                           std::uint64_t seed);

}  // namespace pstruct

#endif
