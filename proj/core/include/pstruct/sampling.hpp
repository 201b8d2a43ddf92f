// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_SAMPLING_HPP
#define PSTRUCT_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "pstruct/sym_tensor.hpp"

namespace pstruct {

/// Seeded sampler for randomized constitutive checks.
///
/// Magnitudes are log-uniform over [10^lo, 10^hi] (default [1e-6, 1e6]);
/// directions are iid standard normal entries, normalized.
class TensorSampler {
 public:
  explicit TensorSampler(std::uint64_t seed, double lo_exp = -6.0, double hi_exp = 6.0)
      : rng_(seed), exp_(lo_exp, hi_exp), unit_(0.0, 1.0), normal_(0.0, 1.0) {}

  double magnitude() { return std::pow(10.0, exp_(rng_)); }
  double uniform01() { return unit_(rng_); }
  double normal() { return normal_(rng_); }

  /// Random unit-norm symmetric tensor (Frobenius norm 1).
  SymTensor unit_sym(int dim);

  /// Random symmetric tensor with log-uniform magnitude.
  SymTensor sym_tensor(int dim);

  /// Random full matrix with entries scaled to the given magnitude.
  MatD full_matrix(int dim, double scale);

  /// Unit tensor orthogonal (Frobenius) to the given unit tensor.
  SymTensor unit_orthogonal_to(const SymTensor& q);

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> exp_;
  std::uniform_real_distribution<double> unit_;
  std::normal_distribution<double> normal_;
};

}  // namespace pstruct

#endif
