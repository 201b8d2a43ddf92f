// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_FEM_HPP
#define PSTRUCT_FEM_HPP

#include <Eigen/SparseCore>
#include <array>
#include <vector>

#include "pstruct/fields.hpp"
#include "pstruct/mesh.hpp"
#include "pstruct/stress.hpp"

namespace pstruct {

/// Piecewise-linear vector field on a triangle mesh with homogeneous
/// Dirichlet boundary values. Degrees of freedom interleave components:
/// u_x of node i at 2i, u_y at 2i+1. Boundary entries stay zero; the solver
/// and prolongation re-assert this invariant after every update.
class DiscreteField {
 public:
  explicit DiscreteField(const Mesh& mesh)
      : values(static_cast<std::size_t>(2 * mesh.n_nodes()), 0.0), mesh_(&mesh) {}

  const Mesh& mesh() const { return *mesh_; }
  int n_dofs() const { return static_cast<int>(values.size()); }

  Vec2 at_node(int i) const { return {values[2 * i], values[2 * i + 1]}; }
  void set_node(int i, const Vec2& v) {
    values[2 * i] = v.x;
    values[2 * i + 1] = v.y;
  }

  /// Forces boundary degrees of freedom to zero.
  void zero_boundary();
  double max_boundary_abs() const;

  /// Value at barycentric coordinates of an element.
  Vec2 value_at(int elem, const std::array<double, 3>& bary) const;

  /// Element-constant gradient, J(i, j) = d u_i / d x_j.
  MatD gradient_on(int elem) const;
  SymTensor sym_grad_on(int elem) const;

  std::vector<double> values;

 private:
  const Mesh* mesh_;
};

/// Nodal interpolation of an analytic field (no boundary forcing).
DiscreteField interpolate(const Mesh& mesh, const AnalyticVectorField& u);

/// Transfers a field to the once-refined mesh: coarse nodes copy over
/// (indices are preserved), edge midpoints average their parents. Boundary
/// values are re-zeroed afterwards.
DiscreteField prolongate(const DiscreteField& coarse, const Mesh& fine);

/// Load vector b_i = integral f . v_i by the edge-midpoint rule (exact for
/// quadratic integrands); Dirichlet rows are zeroed.
std::vector<double> load_vector(const Mesh& mesh, const VectorField& f);

/// L^q norm of the load with q = p/(p-1), by the degree-5 rule.
double load_norm_dual(const Mesh& mesh, const VectorField& f, double p);

/// Residual of the weak form, R(u) = A(u) - b: the stress term is exact
/// (the symmetric gradient is element-constant), b is a precomputed load
/// vector. Dirichlet rows are zeroed.
std::vector<double> assemble_residual(const StressModel& m, const DiscreteField& u,
                                      const std::vector<double>& load);

/// Tangent matrix of the weak form at u, with Dirichlet rows and columns
/// replaced by identity. Exactly symmetric (transposed entries are the same
/// floating-point values). Throws DegenerateError when an element has zero
/// symmetric gradient while p < 2 with zero shift.
Eigen::SparseMatrix<double> assemble_jacobian(const StressModel& m, const DiscreteField& u);

/// Energy sum_T |T| (mu phi(|Du|) + eps/2 |Du|^2) - b . u; its gradient is
/// assemble_residual.
double energy(const StressModel& m, const DiscreteField& u, const std::vector<double>& load);

/// Error norms against an analytic field (degree-5 rule).
double l2_error(const DiscreteField& u, const AnalyticVectorField& ref);
double h1_semi_error(const DiscreteField& u, const AnalyticVectorField& ref);
/// || F(sym grad u_h) - F(sym grad u*) ||_{L^2}.
double f_error(const StressModel& m, const DiscreteField& u, const AnalyticVectorField& ref);

double dot(const std::vector<double>& a, const std::vector<double>& b);
double norm2(const std::vector<double>& a);

}  // namespace pstruct

#endif
