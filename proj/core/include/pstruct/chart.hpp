// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_CHART_HPP
#define PSTRUCT_CHART_HPP

#include <functional>
#include <vector>

#include "pstruct/geometry.hpp"
#include "pstruct/mesh.hpp"
#include "pstruct/sym_tensor.hpp"

namespace pstruct {

/// Analytic boundary graph in chart-local coordinates: a(0) = 0, a'(0) = 0,
/// with closed-form first and second derivatives.
struct ChartGraph {
  std::function<double(double)> a;
  std::function<double(double)> da;
  std::function<double(double)> dda;
};

/// Local description of a boundary patch, or of the interior bulk region.
///
/// Boundary kind: local coordinates (x1, x2) = (tangent, inward normal)
/// components of x - center; the boundary is the graph x2 = a(x1) on
/// |x1| < R, the domain lies above it, and the chart box is
/// Omega_P = { |x1| < R, a(x1) < x2 < a(x1) + Rp }. The cutoff is a
/// separable C^2 quintic bump: 1 on the half box, 0 outside the 3/4 box.
///
/// Interior kind: radial C^2 plateau profile vanishing near the boundary;
/// its plateau together with the half boxes of the boundary charts covers
/// the domain.
struct Chart {
  enum class Kind { Boundary, Interior };

  Kind kind = Kind::Boundary;

  // Boundary kind
  Vec2 center;
  Vec2 tangent;
  Vec2 normal;  // inward
  double R = 0.0;
  double Rp = 0.0;
  double r_p = 0.0;  // slope bound sup|a'| < r_p, in (0,1)
  ChartGraph graph;

  // Interior kind: value 1 on [plateau_lo, plateau_hi] (radius from origin),
  // C^2 ramps down to 0 at [support_lo, support_hi]
  double plateau_lo = 0.0, plateau_hi = 0.0;
  double support_lo = 0.0, support_hi = 0.0;

  /// Local coordinates (tangent, inward-normal components of x - center).
  Vec2 to_local(const Vec2& x) const {
    const Vec2 d = x - center;
    return {tangent.dot(d), normal.dot(d)};
  }
  Vec2 to_global(const Vec2& loc) const { return center + tangent * loc.x + normal * loc.y; }

  /// Membership in the frac-scaled chart box (frac = 0.5 or 0.75), with a
  /// 1e-12 tolerance below the graph so nodes lying exactly on the boundary
  /// count as covered.
  bool in_box(const Vec2& x, double frac) const;
};

/// Cutoff value with global-coordinate derivatives.
struct CutoffValue {
  double value = 0.0;
  Vec2 gradient;
  SymTensor hessian{2};
};

/// Evaluates the chart's C^2 cutoff at a global point. Identically 0 with
/// zero derivatives outside the chart column / support.
CutoffValue cutoff_eval(const Chart& chart, const Vec2& x);

/// Covers the C^2 boundary of the domain with rotated-graph charts whose
/// slope stays below r_max in (0, 1). Half boxes cover the boundary; the
/// chart count grows as r_max shrinks (16 charts for the unit disk at
/// r_max = 0.5). Throws NotSmoothBoundaryError for domains without an
/// analytic C^2 boundary (unit square, imported meshes).
std::vector<Chart> boundary_charts(const DomainSpec& spec, double r_max);

/// Interior cutoff whose plateau, together with the half boxes of the given
/// charts, covers the domain; it vanishes in a band near the boundary.
Chart interior_cutoff(const DomainSpec& spec, const std::vector<Chart>& charts);

}  // namespace pstruct

#endif
