// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#include "pstruct/fem.hpp"

#include <cmath>
#include <stdexcept>

#include "pstruct/errors.hpp"
#include "pstruct/quadrature.hpp"

namespace pstruct {
namespace {

Vec2 quad_point(const Mesh& mesh, int elem, const std::array<double, 3>& bary) {
  const auto& el = mesh.elements[elem];
  Vec2 x;
  for (int i = 0; i < 3; ++i) x += mesh.nodes[el[i]] * bary[i];
  return x;
}

void check_mesh_match(const DiscreteField& u, const Mesh& mesh) {
  if (&u.mesh() != &mesh && u.n_dofs() != 2 * mesh.n_nodes())
    throw DimensionMismatchError("discrete field does not match the mesh");
}

}  // namespace

void DiscreteField::zero_boundary() {
  for (int i : mesh_->boundary_nodes) {
    values[2 * i] = 0.0;
    values[2 * i + 1] = 0.0;
  }
}

double DiscreteField::max_boundary_abs() const {
  double m = 0.0;
  for (int i : mesh_->boundary_nodes)
    m = std::fmax(m, std::fmax(std::fabs(values[2 * i]), std::fabs(values[2 * i + 1])));
  return m;
}

Vec2 DiscreteField::value_at(int elem, const std::array<double, 3>& bary) const {
  const auto& el = mesh_->elements[elem];
  Vec2 v;
  for (int i = 0; i < 3; ++i) v += at_node(el[i]) * bary[i];
  return v;
}

MatD DiscreteField::gradient_on(int elem) const {
  const auto& el = mesh_->elements[elem];
  const auto& g = mesh_->hat_gradients[elem];
  MatD j(2);
  for (int i = 0; i < 3; ++i) {
    const Vec2 v = at_node(el[i]);
    j(0, 0) += v.x * g[i].x;
    j(0, 1) += v.x * g[i].y;
    j(1, 0) += v.y * g[i].x;
    j(1, 1) += v.y * g[i].y;
  }
  return j;
}

SymTensor DiscreteField::sym_grad_on(int elem) const { return sym(gradient_on(elem)); }

DiscreteField interpolate(const Mesh& mesh, const AnalyticVectorField& u) {
  DiscreteField f(mesh);
  for (int i = 0; i < mesh.n_nodes(); ++i) f.set_node(i, u.value(mesh.nodes[i]));
  return f;
}

DiscreteField prolongate(const DiscreteField& coarse, const Mesh& fine) {
  if (2 * static_cast<int>(fine.parent_edge.size()) != 2 * fine.n_nodes() ||
      fine.n_nodes() < coarse.n_dofs() / 2)
    throw DimensionMismatchError("prolongate: fine mesh is not a refinement of the coarse mesh");
  DiscreteField f(fine);
  const int nc = coarse.n_dofs() / 2;
  for (int i = 0; i < fine.n_nodes(); ++i) {
    const auto& pe = fine.parent_edge[i];
    if (pe[0] < 0) {
      if (i >= nc)
        throw DimensionMismatchError("prolongate: base node beyond the coarse mesh");
      f.set_node(i, coarse.at_node(i));
    } else {
      f.set_node(i, (coarse.at_node(pe[0]) + coarse.at_node(pe[1])) * 0.5);
    }
  }
  f.zero_boundary();
  return f;
}

std::vector<double> load_vector(const Mesh& mesh, const VectorField& f) {
  std::vector<double> b(static_cast<std::size_t>(2 * mesh.n_nodes()), 0.0);
  const TriQuadRule& rule = tri_rule_degree2();
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const auto& el = mesh.elements[e];
    for (int q = 0; q < rule.size(); ++q) {
      const Vec2 fx = f(quad_point(mesh, e, rule.points[q]));
      const double wq = rule.weights[q] * mesh.areas[e];
      for (int i = 0; i < 3; ++i) {
        b[2 * el[i]] += wq * rule.points[q][i] * fx.x;
        b[2 * el[i] + 1] += wq * rule.points[q][i] * fx.y;
      }
    }
  }
  for (int i : mesh.boundary_nodes) b[2 * i] = b[2 * i + 1] = 0.0;
  return b;
}

double load_norm_dual(const Mesh& mesh, const VectorField& f, double p) {
  if (!(p > 1.0)) throw std::invalid_argument("load_norm_dual: p must exceed 1");
  const double q = p / (p - 1.0);
  const TriQuadRule& rule = tri_rule_degree5();
  double s = 0.0;
  for (int e = 0; e < mesh.n_elements(); ++e)
    for (int k = 0; k < rule.size(); ++k)
      s += rule.weights[k] * mesh.areas[e] *
           std::pow(f(quad_point(mesh, e, rule.points[k])).norm(), q);
  return std::pow(s, 1.0 / q);
}

std::vector<double> assemble_residual(const StressModel& m, const DiscreteField& u,
                                      const std::vector<double>& load) {
  const Mesh& mesh = u.mesh();
  check_mesh_match(u, mesh);
  if (load.size() != u.values.size())
    throw DimensionMismatchError("assemble_residual: load vector size mismatch");
  std::vector<double> r(u.values.size(), 0.0);
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const SymTensor s = stress(m, u.sym_grad_on(e));
    const auto& el = mesh.elements[e];
    const auto& g = mesh.hat_gradients[e];
    const double a = mesh.areas[e];
    for (int i = 0; i < 3; ++i)
      for (int c = 0; c < 2; ++c)
        r[2 * el[i] + c] += a * (s(c, 0) * g[i].x + s(c, 1) * g[i].y);
  }
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= load[k];
  for (int i : mesh.boundary_nodes) r[2 * i] = r[2 * i + 1] = 0.0;
  return r;
}

Eigen::SparseMatrix<double> assemble_jacobian(const StressModel& m, const DiscreteField& u) {
  const Mesh& mesh = u.mesh();
  check_mesh_match(u, mesh);
  const int n = 2 * mesh.n_nodes();
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(36) * mesh.n_elements() + mesh.boundary_nodes.size() * 2);
  std::vector<char> dirichlet(static_cast<std::size_t>(mesh.n_nodes()), 0);
  for (int i : mesh.boundary_nodes) dirichlet[i] = 1;

  double local[6][6];
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const FourthOrderTensor ds = stress_jacobian(m, u.sym_grad_on(e));
    const auto& el = mesh.elements[e];
    const auto& g = mesh.hat_gradients[e];
    const double area = mesh.areas[e];
    // Fill the upper triangle once and mirror, so transposed entries are
    // bitwise identical and the assembled matrix is exactly symmetric.
    for (int a = 0; a < 6; ++a) {
      const int i = a / 2, c = a % 2;
      const double gi[2] = {g[i].x, g[i].y};
      for (int b = a; b < 6; ++b) {
        const int j = b / 2, d = b % 2;
        const double gj[2] = {g[j].x, g[j].y};
        double v = 0.0;
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) v += ds(c, k, d, l) * gi[k] * gj[l];
        local[a][b] = area * v;
        local[b][a] = local[a][b];
      }
    }
    for (int a = 0; a < 6; ++a) {
      const int ra = 2 * el[a / 2] + a % 2;
      if (dirichlet[el[a / 2]]) continue;
      for (int b = 0; b < 6; ++b) {
        if (dirichlet[el[b / 2]]) continue;
        trip.emplace_back(ra, 2 * el[b / 2] + b % 2, local[a][b]);
      }
    }
  }
  for (int i : mesh.boundary_nodes) {
    trip.emplace_back(2 * i, 2 * i, 1.0);
    trip.emplace_back(2 * i + 1, 2 * i + 1, 1.0);
  }
  Eigen::SparseMatrix<double> jac(n, n);
  jac.setFromTriplets(trip.begin(), trip.end());
  return jac;
}

double energy(const StressModel& m, const DiscreteField& u, const std::vector<double>& load) {
  const Mesh& mesh = u.mesh();
  const PDeltaParams eff = m.effective();
  double s = 0.0;
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const double r = u.sym_grad_on(e).norm();
    s += mesh.areas[e] * (m.base().mu * phi(eff, r) + 0.5 * m.eps() * r * r);
  }
  return s - dot(load, u.values);
}

namespace {

template <typename Density>
double integrate_error(const Mesh& mesh, Density&& density) {
  const TriQuadRule& rule = tri_rule_degree5();
  double s = 0.0;
  for (int e = 0; e < mesh.n_elements(); ++e)
    for (int q = 0; q < rule.size(); ++q)
      s += rule.weights[q] * mesh.areas[e] * density(e, rule.points[q]);
  return std::sqrt(s);
}

}  // namespace

double l2_error(const DiscreteField& u, const AnalyticVectorField& ref) {
  const Mesh& mesh = u.mesh();
  return integrate_error(mesh, [&](int e, const std::array<double, 3>& b) {
    const Vec2 d = u.value_at(e, b) - ref.value(quad_point(mesh, e, b));
    return d.dot(d);
  });
}

double h1_semi_error(const DiscreteField& u, const AnalyticVectorField& ref) {
  const Mesh& mesh = u.mesh();
  return integrate_error(mesh, [&](int e, const std::array<double, 3>& b) {
    const MatD jh = u.gradient_on(e);
    const MatD jr = ref.jacobian(quad_point(mesh, e, b));
    double s = 0.0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const double d = jh(i, j) - jr(i, j);
        s += d * d;
      }
    return s;
  });
}

double f_error(const StressModel& m, const DiscreteField& u, const AnalyticVectorField& ref) {
  const Mesh& mesh = u.mesh();
  return integrate_error(mesh, [&](int e, const std::array<double, 3>& b) {
    const SymTensor fh = f_map(m, u.sym_grad_on(e));
    const SymTensor fr = f_map(m, sym(ref.jacobian(quad_point(mesh, e, b))));
    const SymTensor d = fh - fr;
    return d.norm_squared();
  });
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("dot: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

}  // namespace pstruct
