// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#include "pstruct/quadrature.hpp"

namespace pstruct {

const TriQuadRule& tri_rule_degree2() {
  static const TriQuadRule rule = [] {
    TriQuadRule r;
    r.degree = 2;
    r.points = {{0.5, 0.5, 0.0}, {0.0, 0.5, 0.5}, {0.5, 0.0, 0.5}};
    r.weights = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    return r;
  }();
  return rule;
}

const TriQuadRule& tri_rule_degree5() {
  static const TriQuadRule rule = [] {
    TriQuadRule r;
    r.degree = 5;
    const double a1 = 0.059715871789770, b1 = 0.470142064105115, w1 = 0.132394152788506;
    const double a2 = 0.797426985353087, b2 = 0.101286507323456, w2 = 0.125939180544827;
    r.points = {{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
                {a1, b1, b1},
                {b1, a1, b1},
                {b1, b1, a1},
                {a2, b2, b2},
                {b2, a2, b2},
                {b2, b2, a2}};
    r.weights = {0.225, w1, w1, w1, w2, w2, w2};
    return r;
  }();
  return rule;
}

}  // namespace pstruct
