// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#include "pstruct/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pstruct/sampling.hpp"
#include "pstruct/stress.hpp"

namespace pstruct {

void RatioWindow::absorb(double r) {
  if (!std::isfinite(r) || r <= 0.0) throw Error("equivalence ratio not finite and positive");
  min = std::fmin(min, r);
  max = std::fmax(max, r);
  ++count;
}

RatioWindow RatioReport::union_window() const {
  RatioWindow u;
  for (const auto& w : per_delta) {
    u.min = std::fmin(u.min, w.min);
    u.max = std::fmax(u.max, w.max);
    u.count += w.count;
  }
  return u;
}

double RatioReport::drift() const {
  double widest = 0.0;
  for (const auto& w : per_delta) widest = std::fmax(widest, w.width());
  const double uw = union_window().width();
  // Quantities that collapse to a constant leave zero-width windows; their
  // rows coincide, so the drift is zero rather than 0/0.
  if (widest == 0.0) return uw == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return uw / widest - 1.0;
}

namespace {

constexpr int kDim = 3;

struct Sample {
  SymTensor p{kDim};
  SymTensor q{kDim};
  SymTensor dq{kDim};
};

enum Quantity {
  kPhi2TOverPhi1 = 0,
  kPhi1TOverPhi,
  kPowerSumOverPhiSum,
  kGapPairingOverFGapSq,
  kGapPairingOverShiftedPhi,
  kGapPairingOverPhi2Weighted,
  kGapNormOverShiftedPhi1,
  kPairingOverFSq,
  kFSqOverPhi,
  kPqOverPhi2Weighted,
  kPqOverDfSq,
  kPqOverDsSqScaled,
  kNumQuantities
};

const char* quantity_name(int q) {
  switch (q) {
    case kPhi2TOverPhi1: return "phi2_t_over_phi1";
    case kPhi1TOverPhi: return "phi1_t_over_phi";
    case kPowerSumOverPhiSum: return "power_sum_over_phi_sum";
    case kGapPairingOverFGapSq: return "stress_gap_pairing_over_f_gap_sq";
    case kGapPairingOverShiftedPhi: return "stress_gap_pairing_over_shifted_phi";
    case kGapPairingOverPhi2Weighted: return "stress_gap_pairing_over_phi2_weighted";
    case kGapNormOverShiftedPhi1: return "stress_gap_norm_over_shifted_phi1";
    case kPairingOverFSq: return "stress_pairing_over_f_sq";
    case kFSqOverPhi: return "f_sq_over_phi";
    case kPqOverPhi2Weighted: return "pq_over_phi2_weighted";
    case kPqOverDfSq: return "pq_over_df_sq";
    case kPqOverDsSqScaled: return "pq_over_ds_sq_scaled";
    default: throw Error("unknown quantity");
  }
}

std::vector<Sample> draw_samples(long n, std::uint64_t seed) {
  TensorSampler sampler(seed);
  std::vector<Sample> samples;
  samples.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    Sample s;
    s.p = sampler.unit_sym(kDim);
    s.p *= sampler.magnitude();
    if (i % 2 == 0) {
      s.q = sampler.unit_sym(kDim);
      s.q *= sampler.magnitude();
    } else {
      // correlated pair: Q near P at a log-uniform relative distance
      const double rel = std::pow(10.0, -6.0 * sampler.uniform01());
      SymTensor gap = sampler.unit_sym(kDim);
      gap *= rel * s.p.norm();
      s.q = s.p;
      s.q += gap;
    }
    // direction probes: aligned and orthogonal directions attain the
    // radial/tangential eigenvalue edges of the Jacobian quantities
    if (i % 16 == 0) {
      s.dq = s.p;
      s.dq *= 1.0 / s.p.norm();
    } else if (i % 17 == 0) {
      SymTensor phat = s.p;
      phat *= 1.0 / s.p.norm();
      s.dq = sampler.unit_orthogonal_to(phat);
    } else {
      s.dq = sampler.unit_sym(kDim);
    }
    s.dq *= sampler.magnitude();
    samples.push_back(s);
  }
  return samples;
}

}  // namespace

std::vector<RatioReport> equivalence_suite(const PDeltaParams& prm, long n_samples,
                                           std::uint64_t seed) {
  prm.validate();
  if (n_samples <= 0) throw std::invalid_argument("n_samples must be > 0");

  std::vector<double> grid = {0.0, 1e-3, 1e-2, 1e-1, 1.0, prm.delta0};
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const std::vector<Sample> samples = draw_samples(n_samples, seed);

  std::vector<RatioReport> reports(kNumQuantities);
  for (int q = 0; q < kNumQuantities; ++q) {
    reports[static_cast<std::size_t>(q)].name = quantity_name(q);
    reports[static_cast<std::size_t>(q)].p = prm.p;
    reports[static_cast<std::size_t>(q)].mu = prm.mu;
    reports[static_cast<std::size_t>(q)].seed = seed;
    reports[static_cast<std::size_t>(q)].dim = kDim;
    reports[static_cast<std::size_t>(q)].n_per_delta = n_samples;
    reports[static_cast<std::size_t>(q)].delta_grid = grid;
    reports[static_cast<std::size_t>(q)].per_delta.resize(grid.size());
  }

  for (std::size_t di = 0; di < grid.size(); ++di) {
    const double delta = grid[di];
    PDeltaParams row = prm.with_delta(delta);
    const StressModel model = StressModel::canonical(row);
    for (const Sample& s : samples) {
      double ratio[kNumQuantities];

      const double t = s.p.norm();
      const double phi1_t = phi_prime(row, t);
      const double phi2_t = phi_second(row, t);
      ratio[kPhi2TOverPhi1] = phi2_t * t / phi1_t;
      ratio[kPhi1TOverPhi] = phi1_t * t / phi(row, t);
      const double dp = std::pow(delta, row.p);
      ratio[kPowerSumOverPhiSum] = (std::pow(t, row.p) + dp) / (phi(row, t) + dp);

      const SymTensor stress_q = stress(model, s.q);
      SymTensor sgap = stress(model, s.p);
      sgap -= stress_q;
      SymTensor pgap = s.p;
      pgap -= s.q;
      const double pairing = frob_inner(sgap, pgap);
      const SymTensor f_q = f_map(model, s.q);
      SymTensor fgap = f_map(model, s.p);
      fgap -= f_q;
      const double gap = pgap.norm();
      ratio[kGapPairingOverFGapSq] = pairing / fgap.norm_squared();
      ratio[kGapPairingOverShiftedPhi] = pairing / phi_shifted(row, t, gap);
      ratio[kGapPairingOverPhi2Weighted] = pairing / (phi_second(row, t + gap) * gap * gap);
      ratio[kGapNormOverShiftedPhi1] = sgap.norm() / phi_shifted_prime(row, t, gap);

      const double qn = s.q.norm();
      ratio[kPairingOverFSq] = frob_inner(stress_q, s.q) / f_q.norm_squared();
      ratio[kFSqOverPhi] = f_q.norm_squared() / phi(row, qn);

      const double pq = p_quantity(model, s.p, s.dq);
      ratio[kPqOverPhi2Weighted] = pq / (phi2_t * s.dq.norm_squared());
      ratio[kPqOverDfSq] = pq / f_map_deriv(model, s.p, s.dq).norm_squared();
      ratio[kPqOverDsSqScaled] = pq * phi2_t / stress_deriv(model, s.p, s.dq).norm_squared();

      const bool near_origin = delta == 0.0 && t < 1e-3 && qn < 1e-3;
      for (int q = 0; q < kNumQuantities; ++q) {
        reports[static_cast<std::size_t>(q)].per_delta[di].absorb(ratio[q]);
        if (near_origin) reports[static_cast<std::size_t>(q)].origin.absorb(ratio[q]);
      }
    }
  }
  return reports;
}

}  // namespace pstruct
