// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_STRESS_HPP
#define PSTRUCT_STRESS_HPP

#include "pstruct/nfunction.hpp"
#include "pstruct/sym_tensor.hpp"

namespace pstruct {

/// Constitutive stress law S(P) = mu (delta' + |P^sym|)^(p-2) P^sym with an
/// optional linear perturbation eps P^sym and an optional regularized shift.
///
/// Variants:
///   Canonical         delta' = delta, eps = 0
///   EpsPerturbed      delta' = delta, eps > 0
///   KappaRegularized  delta' = kappa in (0,1), eps = 0
///   EpsKappa          delta' = kappa in (0,1), eps > 0
///
/// The quadrature-free F map F(P) = (delta' + |P^sym|)^((p-2)/2) P^sym uses
/// the same shift but carries neither mu nor eps.
class StressModel {
 public:
  enum class Variant { Canonical, EpsPerturbed, KappaRegularized, EpsKappa };

  static StressModel canonical(const PDeltaParams& prm);
  static StressModel eps_perturbed(const PDeltaParams& prm, double eps);
  static StressModel kappa_regularized(const PDeltaParams& prm, double kappa);
  static StressModel eps_kappa(const PDeltaParams& prm, double eps, double kappa);

  Variant variant() const { return variant_; }
  const PDeltaParams& base() const { return base_; }
  double eps() const { return eps_; }
  double kappa() const { return kappa_; }

  /// Effective shift delta': kappa for the regularized variants, delta otherwise.
  double shift() const { return regularized() ? kappa_ : base_.delta; }
  bool regularized() const {
    return variant_ == Variant::KappaRegularized || variant_ == Variant::EpsKappa;
  }

  /// Base parameters with delta replaced by the effective shift; the
  /// N-function of this law.
  PDeltaParams effective() const { return base_.with_delta(shift()); }

  /// True where first derivatives of S exist: everywhere for p = 2,
  /// away from the origin or with a positive shift for p < 2.
  bool differentiable_at(double r) const {
    return base_.p == 2.0 || shift() > 0.0 || r > 0.0;
  }

 private:
  StressModel(Variant v, const PDeltaParams& prm, double eps, double kappa);

  Variant variant_;
  PDeltaParams base_;
  double eps_;
  double kappa_;
};

/// S(P): accepts symmetric input directly. S(0) = 0.
SymTensor stress(const StressModel& m, const SymTensor& p);

/// S(M) for a full matrix: symmetrizes first, so S(M) = S(sym(M)).
SymTensor stress(const StressModel& m, const MatD& mfull);

/// Analytic derivative dS_ij/dP_kl at P, as a fourth-order tensor with both
/// minor symmetries and major symmetry. Restricted to symmetric directions
/// its eigenvalues are the radial value mu phi''(|P|) + eps and the
/// tangential value mu phi'(|P|)/|P| + eps.
/// Throws DegenerateError at |P^sym| = 0 when p < 2 and the shift vanishes.
FourthOrderTensor stress_jacobian(const StressModel& m, const SymTensor& p);

/// Directional derivative DS(Q)[dQ] without forming the fourth-order tensor.
SymTensor stress_deriv(const StressModel& m, const SymTensor& q, const SymTensor& dq);

/// F(P) = (delta' + |P^sym|)^((p-2)/2) P^sym.
SymTensor f_map(const StressModel& m, const SymTensor& p);

/// Directional derivative DF(Q)[dQ].
SymTensor f_map_deriv(const StressModel& m, const SymTensor& q, const SymTensor& dq);

/// Quadratic form sum dS_ij/dP_kl (Q) dQ_ij dQ_kl, evaluated directly from
/// the eigenstructure. Nonnegative; same degeneracy rule as stress_jacobian.
double p_quantity(const StressModel& m, const SymTensor& q, const SymTensor& dq);

}  // namespace pstruct

#endif
