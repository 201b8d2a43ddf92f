// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_FIELDS_HPP
#define PSTRUCT_FIELDS_HPP

#include <array>
#include <functional>
#include <string>

#include "pstruct/geometry.hpp"
#include "pstruct/stress.hpp"
#include "pstruct/sym_tensor.hpp"

namespace pstruct {

using VectorField = std::function<Vec2(const Vec2&)>;

/// Planar vector field with analytic first and second derivatives.
/// jacobian()(i, j) = d u_i / d x_j; hessians()[c](a, b) = d^2 u_c / dx_a dx_b.
struct AnalyticVectorField {
  std::function<Vec2(const Vec2&)> value;
  std::function<MatD(const Vec2&)> jacobian;
  std::function<std::array<SymTensor, 2>(const Vec2&)> hessians;
};

/// Symmetric gradient of the field at x.
SymTensor sym_grad(const AnalyticVectorField& u, const Vec2& x);

/// Field scaled by a constant amplitude.
AnalyticVectorField scale_field(const AnalyticVectorField& u, double amplitude);

/// Named manufactured solutions (all reachable from run configurations):
///   "sine-x"       (sin(pi x) sin(pi y), 0); zero on the unit square rim
///   "sine-2"       (sin(pi x) sin(pi y), sin(2 pi x) sin(pi y))
///   "disk-bubble"  (1 - x^2 - y^2) (1, 1/2); zero on the unit circle
///   "disk-radial"  (1 - x^2 - y^2)^2 (x, y); gradient vanishes isotropically
///                  at the unit circle
/// Throws ConfigError for unknown names.
AnalyticVectorField named_solution(const std::string& name);

/// Named load fields: "const-x" (1,0), "const-y" (0,1),
/// "sine-load" (sin(pi x) sin(pi y), cos(pi x) cos(pi y)).
/// Throws ConfigError for unknown names.
VectorField named_source(const std::string& name);

/// Load with -div S(sym grad u*) = f for the given analytic solution u*,
/// computed through the stress derivative. Inherits the degeneracy rule of
/// stress_deriv where sym grad u* vanishes.
VectorField manufactured_rhs(const StressModel& m, const AnalyticVectorField& u);

}  // namespace pstruct

#endif
