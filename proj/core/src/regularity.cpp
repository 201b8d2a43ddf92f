// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#include "pstruct/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include <Eigen/Dense>

#include "pstruct/errors.hpp"
#include "pstruct/quadrature.hpp"

namespace pstruct {
namespace {

Vec2 bary_point(const Mesh& mesh, int e, const std::array<double, 3>& b) {
  const auto& el = mesh.elements[e];
  Vec2 x;
  for (int i = 0; i < 3; ++i) x += mesh.nodes[el[i]] * b[i];
  return x;
}

// Packed 2D tensor components and their multiplicity in the Frobenius norm.
constexpr int kComp[3][2] = {{0, 0}, {1, 1}, {0, 1}};
constexpr double kMult[3] = {1.0, 1.0, 2.0};

// Element-constant gradients of each component of a node-lifted tensor.
struct LiftedGradient {
  std::vector<std::array<Vec2, 3>> grad;  // per element, per packed component

  double norm_squared(int e) const {
    double s = 0.0;
    for (int c = 0; c < 3; ++c) s += kMult[c] * grad[e][c].dot(grad[e][c]);
    return s;
  }
};

LiftedGradient lifted_gradient(const Mesh& mesh, const std::vector<SymTensor>& per_element) {
  const std::vector<SymTensor> nodal = lift_to_nodes(mesh, per_element);
  LiftedGradient out;
  out.grad.resize(static_cast<std::size_t>(mesh.n_elements()));
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const auto& el = mesh.elements[e];
    const auto& g = mesh.hat_gradients[e];
    for (int c = 0; c < 3; ++c) {
      Vec2 gc;
      for (int i = 0; i < 3; ++i)
        gc += g[i] * nodal[el[i]](kComp[c][0], kComp[c][1]);
      out.grad[e][c] = gc;
    }
  }
  return out;
}

std::vector<SymTensor> sym_grad_field(const DiscreteField& u) {
  const Mesh& mesh = u.mesh();
  std::vector<SymTensor> out;
  out.reserve(static_cast<std::size_t>(mesh.n_elements()));
  for (int e = 0; e < mesh.n_elements(); ++e) out.push_back(u.sym_grad_on(e));
  return out;
}

}  // namespace

std::vector<SymTensor> f_field(const StressModel& m, const DiscreteField& u) {
  const Mesh& mesh = u.mesh();
  std::vector<SymTensor> out;
  out.reserve(static_cast<std::size_t>(mesh.n_elements()));
  for (int e = 0; e < mesh.n_elements(); ++e) out.push_back(f_map(m, u.sym_grad_on(e)));
  return out;
}

std::vector<SymTensor> lift_to_nodes(const Mesh& mesh, const std::vector<SymTensor>& per_element) {
  if (per_element.size() != static_cast<std::size_t>(mesh.n_elements()))
    throw DimensionMismatchError("lift_to_nodes: one tensor per element required");
  const int n_nodes = mesh.n_nodes();
  const int n_elems = mesh.n_elements();

  std::vector<Vec2> centroid(static_cast<std::size_t>(n_elems));
  std::vector<std::vector<int>> star(static_cast<std::size_t>(n_nodes));
  for (int e = 0; e < n_elems; ++e) {
    centroid[e] = bary_point(mesh, e, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
    for (int i : mesh.elements[e]) star[i].push_back(e);
  }

  // Fit an affine model through the (centroid, value) pairs of the element
  // patch around each node by area-weighted least squares and evaluate it at
  // the node. An incidence average is biased toward the patch centroid, which
  // tilts gradients of the lifted field across the one-sided patches along
  // the boundary; the fit reproduces affine data exactly at every node.
  std::vector<SymTensor> nodal(static_cast<std::size_t>(n_nodes), SymTensor(2));
  auto fit_at = [&](int i, const std::vector<int>& patch) {
    const Vec2 xi = mesh.nodes[i];
    double h = 0.0;
    for (int e : patch) h = std::fmax(h, (centroid[e] - xi).norm());
    if (h == 0.0) return false;
    const auto rows = static_cast<Eigen::Index>(patch.size());
    Eigen::MatrixXd design(rows, 3);
    Eigen::MatrixXd values(rows, 3);
    for (Eigen::Index r = 0; r < rows; ++r) {
      const int e = patch[static_cast<std::size_t>(r)];
      const double w = std::sqrt(mesh.areas[e]);
      design(r, 0) = w;
      design(r, 1) = w * (centroid[e].x - xi.x) / h;
      design(r, 2) = w * (centroid[e].y - xi.y) / h;
      for (int c = 0; c < 3; ++c) values(r, c) = w * per_element[e](kComp[c][0], kComp[c][1]);
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    if (qr.rank() < 3) return false;
    const Eigen::MatrixXd coef = qr.solve(values);
    nodal[i].set(0, 0, coef(0, 0));
    nodal[i].set(1, 1, coef(0, 1));
    nodal[i].set(0, 1, coef(0, 2));
    return true;
  };

  std::vector<int> widened;
  for (int i = 0; i < n_nodes; ++i) {
    const std::vector<int>& ring = star[i];
    if (ring.size() >= 3 && fit_at(i, ring)) continue;
    // too few elements or collinear centroids: widen to the second ring
    widened.assign(ring.begin(), ring.end());
    for (int e : ring)
      for (int j : mesh.elements[e]) widened.insert(widened.end(), star[j].begin(), star[j].end());
    std::sort(widened.begin(), widened.end());
    widened.erase(std::unique(widened.begin(), widened.end()), widened.end());
    if (fit_at(i, widened)) continue;
    // degenerate patch geometry: fall back to the area-weighted mean
    SymTensor acc(2);
    double wsum = 0.0;
    for (int e : widened) {
      SymTensor t = per_element[e];
      t *= mesh.areas[e];
      acc += t;
      wsum += mesh.areas[e];
    }
    acc *= 1.0 / wsum;
    nodal[i] = acc;
  }
  return nodal;
}

double f_l2_norm(const PDeltaParams& prm, const DiscreteField& u) {
  const StressModel base = StressModel::canonical(prm);
  const Mesh& mesh = u.mesh();
  double s = 0.0;
  for (int e = 0; e < mesh.n_elements(); ++e)
    s += mesh.areas[e] * f_map(base, u.sym_grad_on(e)).norm_squared();
  return std::sqrt(s);
}

double grad_f_l2_norm(const PDeltaParams& prm, const DiscreteField& u) {
  const Mesh& mesh = u.mesh();
  const LiftedGradient lg = lifted_gradient(mesh, f_field(StressModel::canonical(prm), u));
  double s = 0.0;
  for (int e = 0; e < mesh.n_elements(); ++e) s += mesh.areas[e] * lg.norm_squared(e);
  return std::sqrt(s);
}

double second_gradient_indicator(const PDeltaParams& prm, const DiscreteField& u) {
  prm.validate();
  const double q = 3.0 * prm.p / (prm.p + 1.0);
  const Mesh& mesh = u.mesh();
  const LiftedGradient lg = lifted_gradient(mesh, sym_grad_field(u));
  double s = 0.0;
  for (int e = 0; e < mesh.n_elements(); ++e)
    s += mesh.areas[e] * std::pow(lg.norm_squared(e), 0.5 * q);
  return std::pow(s, 1.0 / q);
}

BoundarySplit boundary_split(const PDeltaParams& prm, const DiscreteField& u,
                             const std::vector<Chart>& charts, const Chart& interior) {
  if (interior.kind != Chart::Kind::Interior)
    throw std::invalid_argument("boundary_split: interior cutoff chart expected");
  const Mesh& mesh = u.mesh();
  const LiftedGradient lg = lifted_gradient(mesh, f_field(StressModel::canonical(prm), u));
  const TriQuadRule& rule = tri_rule_degree5();

  BoundarySplit out;
  out.cover_min = std::numeric_limits<double>::infinity();
  for (int e = 0; e < mesh.n_elements(); ++e) {
    const double g2 = lg.norm_squared(e);
    for (int q = 0; q < rule.size(); ++q) {
      const Vec2 x = bary_point(mesh, e, rule.points[q]);
      const double wq = rule.weights[q] * mesh.areas[e];
      const double xi0 = cutoff_eval(interior, x).value;
      double wsum = xi0 * xi0;
      out.interior += wq * xi0 * xi0 * g2;
      for (const Chart& ch : charts) {
        const double xi = cutoff_eval(ch, x).value;
        if (xi == 0.0) continue;
        wsum += xi * xi;
        const Vec2 loc = ch.to_local(x);
        const Vec2 tau = ch.tangent + ch.graph.da(loc.x) * ch.normal;
        double t2 = 0.0, n2 = 0.0;
        for (int c = 0; c < 3; ++c) {
          const double dt = tau.dot(lg.grad[e][c]);
          const double dn = ch.normal.dot(lg.grad[e][c]);
          t2 += kMult[c] * dt * dt;
          n2 += kMult[c] * dn * dn;
        }
        out.tangential += wq * xi * xi * t2;
        out.normal += wq * xi * xi * n2;
        out.weighted_total += wq * xi * xi * g2;
      }
      out.weighted_total += wq * xi0 * xi0 * g2;
      out.cover_min = std::min(out.cover_min, wsum);
      out.cover_max = std::max(out.cover_max, wsum);
    }
  }
  const double sum = out.interior + out.tangential + out.normal;
  if (out.weighted_total > 0.0)
    out.consistency_rel = std::fabs(sum - out.weighted_total) / out.weighted_total;
  return out;
}

FieldCheckResult field_window_check(const StressModel& m, const DiscreteField& u) {
  if (m.eps() != 0.0)
    throw std::invalid_argument("field_window_check: windows assume the unperturbed law");
  const PDeltaParams eff = m.effective();
  const double p = eff.p, mu = m.base().mu;
  const double guard = 1e-9;
  const double lo[3] = {mu, 4.0 * mu * (p - 1.0) / (p * p), (p - 1.0) / mu};
  const double hi[3] = {mu / (p - 1.0), mu, 1.0 / mu};

  const Mesh& mesh = u.mesh();
  std::map<std::pair<int, int>, int> first_owner;
  FieldCheckResult out;
  out.ratio_min = {std::numeric_limits<double>::infinity(),
                   std::numeric_limits<double>::infinity(),
                   std::numeric_limits<double>::infinity()};
  out.ratio_max = {0.0, 0.0, 0.0};

  for (int e = 0; e < mesh.n_elements(); ++e) {
    const auto& el = mesh.elements[e];
    for (int k = 0; k < 3; ++k) {
      const int a = el[k], b = el[(k + 1) % 3];
      const auto key = std::minmax(a, b);
      auto it = first_owner.find(key);
      if (it == first_owner.end()) {
        first_owner.emplace(key, e);
        continue;
      }
      const SymTensor d1 = u.sym_grad_on(it->second);
      const SymTensor d2 = u.sym_grad_on(e);
      SymTensor q = d1 + d2;
      q *= 0.5;
      const SymTensor dq = d1 - d2;
      const double qn = q.norm(), dqn = dq.norm();
      if (dqn <= 1e-12 * std::max(1.0, qn) || !m.differentiable_at(qn)) {
        ++out.skipped;
        continue;
      }
      const double pq = p_quantity(m, q, dq);
      const double ph2 = phi_second(eff, qn);
      const double df2 = f_map_deriv(m, q, dq).norm_squared();
      const double ds2 = stress_deriv(m, q, dq).norm_squared();
      const double ratios[3] = {pq / (ph2 * dqn * dqn), pq / df2, pq * ph2 / ds2};
      ++out.checked;
      bool ok = true;
      for (int c = 0; c < 3; ++c) {
        out.ratio_min[c] = std::min(out.ratio_min[c], ratios[c]);
        out.ratio_max[c] = std::max(out.ratio_max[c], ratios[c]);
        if (!(ratios[c] >= lo[c] * (1.0 - guard) && ratios[c] <= hi[c] * (1.0 + guard)))
          ok = false;
      }
      if (!ok) ++out.outliers;
    }
  }
  return out;
}

RegularityRow regularity_row(const PDeltaParams& prm, const Mesh& mesh, const VectorField& load,
                             const std::vector<Chart>& charts, const Chart& interior,
                             const NewtonOptions& nopt, DiscreteField* solution_out) {
  prm.validate();
  const std::vector<double> b = load_vector(mesh, load);
  const auto schedule = default_schedule(prm);
  ContinuationReport crep;
  DiscreteField u = continuation_solve(prm, b, DiscreteField(mesh), schedule, nopt, &crep);
  const StressModel final_model = stage_model(prm, schedule.back());

  RegularityRow row;
  row.level = mesh.level;
  row.h_max = mesh.h_max;
  row.n_elements = mesh.n_elements();
  row.energy = energy(final_model, u, b);
  row.f_norm = f_l2_norm(prm, u);
  row.grad_f_norm = grad_f_l2_norm(prm, u);
  row.w2q = second_gradient_indicator(prm, u);
  const BoundarySplit split = boundary_split(prm, u, charts, interior);
  row.interior = split.interior;
  row.tangential = split.tangential;
  row.normal = split.normal;
  row.split_consistency = split.consistency_rel;
  row.cover_min = split.cover_min;
  row.load_dual = load_norm_dual(mesh, load, prm.p);
  row.delta = prm.delta;
  row.kappa_final = crep.kappa_final;
  for (int it : crep.iterations) row.newton_iters += it;
  row.stabilization_rel = crep.stabilization_rel;
  row.outlier_fraction = field_window_check(final_model, u).outlier_fraction();
  if (solution_out) *solution_out = std::move(u);
  return row;
}

RegularityStudy refinement_study(const PDeltaParams& prm, const DomainSpec& domain,
                                 const VectorField& load, const RegularityOptions& opt) {
  prm.validate();
  if (opt.levels.empty()) throw std::invalid_argument("refinement_study: no levels");
  const std::vector<Chart> charts = boundary_charts(domain, opt.r_max);
  const Chart interior = interior_cutoff(domain, charts);

  RegularityStudy study;
  Mesh finest;
  for (int level : opt.levels) {
    Mesh mesh = build_mesh(domain, level);
    study.rows.push_back(regularity_row(prm, mesh, load, charts, interior, opt.newton, nullptr));
    finest = std::move(mesh);
  }

  for (double s : opt.load_scales) {
    const VectorField scaled = [&load, s](const Vec2& x) { return load(x) * s; };
    const std::vector<double> b = load_vector(finest, scaled);
    ContinuationReport crep;
    DiscreteField u =
        continuation_solve(prm, b, DiscreteField(finest), default_schedule(prm), opt.newton, &crep);
    study.sweep_scales.push_back(s);
    study.sweep_grad_f.push_back(grad_f_l2_norm(prm, u));
  }
  for (std::size_t i = 1; i < study.sweep_grad_f.size(); ++i)
    if (study.sweep_grad_f[i] < 0.99 * study.sweep_grad_f[i - 1]) study.sweep_monotone = false;

  for (double d : opt.delta_sweep) {
    const PDeltaParams swept = prm.with_delta(d);
    study.delta_rows.push_back(
        regularity_row(swept, finest, load, charts, interior, opt.newton, nullptr));
  }
  return study;
}

}  // namespace pstruct
