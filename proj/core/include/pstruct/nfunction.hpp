// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_NFUNCTION_HPP
#define PSTRUCT_NFUNCTION_HPP

#include "pstruct/errors.hpp"

namespace pstruct {

/// Parameters of the N-function phi(t) = int_0^t (delta + s)^(p-2) s ds and
/// of the constitutive laws built on it.
///
/// p in (1, 2], delta >= 0, mu > 0. delta0 >= delta caps the shift grid used
/// by delta-uniformity checks.
struct PDeltaParams {
  double p = 2.0;
  double delta = 0.0;
  double mu = 1.0;
  double delta0 = 2.0;

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;

  PDeltaParams with_delta(double d) const {
    PDeltaParams q = *this;
    q.delta = d;
    return q;
  }
};

/// phi(t), evaluated from the closed-form antiderivative
///   ((delta+t)^p / p - delta (delta+t)^(p-1) / (p-1)) - (value at t = 0).
/// Throws std::invalid_argument for t < 0.
double phi(const PDeltaParams& prm, double t);

/// phi'(t) = (delta + t)^(p-2) t, continuously extended by 0 at t = 0.
double phi_prime(const PDeltaParams& prm, double t);

/// phi''(t) = (p-2)(delta+t)^(p-3) t + (delta+t)^(p-2),
/// evaluated in the factored form (delta+t)^(p-3) ((p-1) t + delta).
/// Throws DegenerateError at t = 0 when delta = 0 and p < 2 (the raw value
/// is singular there); use phi_second_times_t for the extension convention.
double phi_second(const PDeltaParams& prm, double t);

/// The product phi''(t) t, continuously extended by 0 at t = 0.
double phi_second_times_t(const PDeltaParams& prm, double t);

/// Shifted N-function phi_a(t) = int_0^t phi'(a+s) s/(a+s) ds, a >= 0,
/// evaluated by adaptive Gauss-Kronrod quadrature. Tolerance 1e-12,
/// absolute at unit scale and relative for large values.
double phi_shifted(const PDeltaParams& prm, double a, double t);

/// Derivative of the shifted N-function: phi_a'(t) = phi'(a+t) t/(a+t),
/// closed form (delta + a + t)^(p-2) t. Extended by 0 at a = t = 0.
double phi_shifted_prime(const PDeltaParams& prm, double a, double t);

}  // namespace pstruct

#endif
