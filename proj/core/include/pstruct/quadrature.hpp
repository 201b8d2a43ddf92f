// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_QUADRATURE_HPP
#define PSTRUCT_QUADRATURE_HPP

#include <array>
#include <vector>

namespace pstruct {

/// Symmetric triangle quadrature rule in barycentric coordinates; weights
/// sum to 1 and scale by the element area.
struct TriQuadRule {
  std::vector<std::array<double, 3>> points;
  std::vector<double> weights;
  int degree = 0;

  int size() const { return static_cast<int>(weights.size()); }
};

/// Edge-midpoint rule, exact for quadratics.
const TriQuadRule& tri_rule_degree2();

/// Seven-point rule, exact for quintics; used for error norms where the
/// integrand is not polynomial.
const TriQuadRule& tri_rule_degree5();

}  // namespace pstruct

#endif
