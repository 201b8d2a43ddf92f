// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#include "pstruct/stress.hpp"

#include <cmath>
#include <stdexcept>

namespace pstruct {

StressModel::StressModel(Variant v, const PDeltaParams& prm, double eps, double kappa)
    : variant_(v), base_(prm), eps_(eps), kappa_(kappa) {
  base_.validate();
}

StressModel StressModel::canonical(const PDeltaParams& prm) {
  return StressModel(Variant::Canonical, prm, 0.0, 0.0);
}

StressModel StressModel::eps_perturbed(const PDeltaParams& prm, double eps) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  return StressModel(Variant::EpsPerturbed, prm, eps, 0.0);
}

StressModel StressModel::kappa_regularized(const PDeltaParams& prm, double kappa) {
  if (!(kappa > 0.0 && kappa < 1.0)) throw std::invalid_argument("kappa must lie in (0, 1)");
  return StressModel(Variant::KappaRegularized, prm, 0.0, kappa);
}

StressModel StressModel::eps_kappa(const PDeltaParams& prm, double eps, double kappa) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  if (!(kappa > 0.0 && kappa < 1.0)) throw std::invalid_argument("kappa must lie in (0, 1)");
  return StressModel(Variant::EpsKappa, prm, eps, kappa);
}

namespace {

void check_degenerate(const StressModel& m, double r, const char* op) {
  if (!m.differentiable_at(r))
    throw DegenerateError(std::string(op) + ": derivative singular at the origin for p < 2 with zero shift");
}

}  // namespace

SymTensor stress(const StressModel& m, const SymTensor& p) {
  const double r = p.norm();
  SymTensor s(p.dim());
  if (r == 0.0) return s;
  const double g = std::pow(m.shift() + r, m.base().p - 2.0);
  s = p;
  s *= m.base().mu * g + m.eps();
  return s;
}

SymTensor stress(const StressModel& m, const MatD& mfull) { return stress(m, sym(mfull)); }

FourthOrderTensor stress_jacobian(const StressModel& m, const SymTensor& p) {
  const int d = p.dim();
  const double r = p.norm();
  check_degenerate(m, r, "stress_jacobian");
  const double pw = m.base().p;
  const double mu = m.base().mu;
  const double b = m.shift() + r;
  const double g = std::pow(b, pw - 2.0);
  FourthOrderTensor a(d);
  // (mu g + eps) times the symmetrizer
  const double iso = mu * g + m.eps();
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          const double symm = 0.5 * ((i == k ? 1.0 : 0.0) * (j == l ? 1.0 : 0.0) +
                                     (i == l ? 1.0 : 0.0) * (j == k ? 1.0 : 0.0));
          if (symm != 0.0) a.set(i, j, k, l, iso * symm);
        }
  if (r > 0.0 && pw < 2.0) {
    // radial rank-one part mu g'(r) r Phat (x) Phat; add() also writes the
    // minor-symmetric aliases, so (k, l) runs over the upper triangle only
    const double coeff = mu * (pw - 2.0) * std::pow(b, pw - 3.0) * r;
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j)
        for (int k = 0; k < d; ++k)
          for (int l = k; l < d; ++l)
            a.add(i, j, k, l, coeff * (p(i, j) / r) * (p(k, l) / r));
  }
  return a;
}

SymTensor stress_deriv(const StressModel& m, const SymTensor& q, const SymTensor& dq) {
  const double r = q.norm();
  check_degenerate(m, r, "stress_deriv");
  const double pw = m.base().p;
  const double mu = m.base().mu;
  const double b = m.shift() + r;
  const double g = std::pow(b, pw - 2.0);
  SymTensor out = dq;
  out *= mu * g + m.eps();
  if (r > 0.0 && pw < 2.0) {
    const double align = frob_inner(q, dq) / r;  // Qhat . dQ
    const double coeff = mu * (pw - 2.0) * std::pow(b, pw - 3.0) * align;
    SymTensor rad = q;
    rad *= coeff;  // (p-2) b^{p-3} (Qhat . dQ) Q
    out += rad;
  }
  return out;
}

SymTensor f_map(const StressModel& m, const SymTensor& p) {
  const double r = p.norm();
  SymTensor f(p.dim());
  if (r == 0.0) return f;
  const double h = std::pow(m.shift() + r, 0.5 * (m.base().p - 2.0));
  f = p;
  f *= h;
  return f;
}

SymTensor f_map_deriv(const StressModel& m, const SymTensor& q, const SymTensor& dq) {
  const double r = q.norm();
  check_degenerate(m, r, "f_map_deriv");
  const double pw = m.base().p;
  const double b = m.shift() + r;
  const double h = std::pow(b, 0.5 * (pw - 2.0));
  SymTensor out = dq;
  out *= h;
  if (r > 0.0 && pw < 2.0) {
    const double align = frob_inner(q, dq) / r;
    const double hp = 0.5 * (pw - 2.0) * std::pow(b, 0.5 * (pw - 4.0));
    SymTensor rad = q;
    rad *= hp * align;
    out += rad;
  }
  return out;
}

double p_quantity(const StressModel& m, const SymTensor& q, const SymTensor& dq) {
  const double r = q.norm();
  check_degenerate(m, r, "p_quantity");
  const double pw = m.base().p;
  const double mu = m.base().mu;
  const double b = m.shift() + r;
  const double g = std::pow(b, pw - 2.0);
  double val = (mu * g + m.eps()) * dq.norm_squared();
  if (r > 0.0 && pw < 2.0) {
    const double align = frob_inner(q, dq) / r;
    val += mu * (pw - 2.0) * std::pow(b, pw - 3.0) * r * align * align;
  }
  return val;
}

}  // namespace pstruct
