// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_TANGENTIAL_HPP
#define PSTRUCT_TANGENTIAL_HPP

#include <functional>

#include "pstruct/chart.hpp"
#include "pstruct/geometry.hpp"

namespace pstruct {

using ScalarField = std::function<double(const Vec2&)>;

/// Scalar field with an analytic gradient.
struct DiffScalarField {
  std::function<double(const Vec2&)> value;
  std::function<Vec2(const Vec2&)> gradient;
};

/// Translation along the boundary graph: in chart-local coordinates
/// (x1, x2) -> (x1 + h, x2 + a(x1 + h) - a(x1)). Points below the graph
/// slide along with it, so the boundary is mapped into itself. Throws
/// SupportViolationError if x or its image leaves the chart column
/// |x1| < R, and std::invalid_argument unless 0 < h <= R/16.
Vec2 tangential_translate(const Chart& chart, const Vec2& x, double h);

/// Forward difference quotient along the graph,
/// (g(T_h x) - g(x)) / h. alpha selects the tangential direction; the
/// planar setting has exactly one, alpha = 0.
ScalarField tangential_diff(const Chart& chart, ScalarField g, double h, int alpha = 0);

/// Backward difference quotient (f(x) - f(T_{-h} x)) / h. Together with the
/// forward quotient it satisfies the discrete integration-by-parts identity
///   integral f * tangential_diff(g) + integral tangential_diff_back(f) * g = 0
/// for fields supported inside the chart column.
ScalarField tangential_diff_back(const Chart& chart, ScalarField f, double h, int alpha = 0);

/// Analytic tangential derivative (t + a'(x1) n) . grad g, the h -> 0 limit
/// of tangential_diff.
ScalarField tangential_deriv(const Chart& chart, const DiffScalarField& g, int alpha = 0);

struct SbpResult {
  double residual = 0.0;  // | integral f d+g + integral (d-f) g |
  double scale = 0.0;     // ||f||_2 ||g||_2 over the chart box
};

/// Verifies the integration-by-parts identity for the difference quotients
/// by midpoint quadrature on a translation-aligned grid in graph
/// coordinates (step along the graph is h/m, so translated quadrature
/// points are again quadrature points; the translation has unit Jacobian).
/// Fields must vanish for |x1| > 7R/8; the residual is pure rounding noise,
/// far below 1e-10 * scale.
SbpResult summation_by_parts_check(const Chart& chart, const ScalarField& f,
                                   const ScalarField& g, double h, int n_s = 256, int n_w = 64);

}  // namespace pstruct

#endif
