// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#include "pstruct/nfunction.hpp"

#include <cmath>
#include <stdexcept>

namespace pstruct {

namespace {

void check_t(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("N-function argument must be >= 0");
}

// Antiderivative of (delta+s)^(p-2) s without the integration constant.
double phi_primitive(double p, double delta, double t) {
  const double b = delta + t;
  return std::pow(b, p) / p - delta * std::pow(b, p - 1.0) / (p - 1.0);
}

}  // namespace

void PDeltaParams::validate() const {
  if (!(p > 1.0 && p <= 2.0)) throw std::invalid_argument("p must lie in (1, 2]");
  if (!(delta >= 0.0)) throw std::invalid_argument("delta must be >= 0");
  if (!(mu > 0.0)) throw std::invalid_argument("mu must be > 0");
  if (!(delta0 >= delta)) throw std::invalid_argument("delta0 must be >= delta");
}

double phi(const PDeltaParams& prm, double t) {
  check_t(t);
  if (t == 0.0) return 0.0;
  const double p = prm.p;
  const double delta = prm.delta;
  if (delta == 0.0) return std::pow(t, p) / p;

  // Subtracting the antiderivative values loses all significant digits when
  // t << delta, so evaluate the difference itself. With x = t/delta,
  //   phi = delta^p [ G(x) - G(0) ],  G'(x) = (1+x)^(p-2) x.
  const double x = t / delta;
  if (x <= 0.5) {
    // Termwise-integrated binomial series of G', alternating with
    // geometrically decaying terms:  sum_j binom(p-2, j) x^(j+2) / (j+2).
    double coef = 1.0;
    double xpow = x * x;
    double sum = 0.0;
    for (int j = 0; j < 200; ++j) {
      const double term = coef * xpow / (j + 2);
      sum += term;
      if (std::fabs(term) <= 1e-17 * sum) break;
      coef *= (p - 2.0 - j) / (j + 1);
      xpow *= x;
    }
    return std::pow(delta, p) * sum;
  }
  const double lx = std::log1p(x);
  if (p * lx > 700.0)  // (1+x)^p would overflow; the constant is negligible
    return phi_primitive(p, delta, t) - phi_primitive(p, delta, 0.0);
  // G(x) - G(0) = [(1+x)^p - 1]/p - [(1+x)^(p-1) - 1]/(p-1), each bracket in
  // expm1 form; for x > 1/2 the outer subtraction cancels at most one digit.
  const double g = std::expm1(p * lx) / p - std::expm1((p - 1.0) * lx) / (p - 1.0);
  return std::pow(delta, p) * g;
}

double phi_prime(const PDeltaParams& prm, double t) {
  check_t(t);
  if (t == 0.0) return 0.0;
  return std::pow(prm.delta + t, prm.p - 2.0) * t;
}

double phi_second(const PDeltaParams& prm, double t) {
  check_t(t);
  if (prm.p == 2.0) return 1.0;  // (delta+t)^{-1}((p-1)t + delta) == 1 identically
  if (t == 0.0 && prm.delta == 0.0)
    throw DegenerateError("phi'' is singular at t = 0 for delta = 0 and p < 2");
  return std::pow(prm.delta + t, prm.p - 3.0) * ((prm.p - 1.0) * t + prm.delta);
}

double phi_second_times_t(const PDeltaParams& prm, double t) {
  check_t(t);
  if (t == 0.0) return 0.0;
  return phi_second(prm, t) * t;
}

double phi_shifted(const PDeltaParams& prm, double a, double t) {
  check_t(t);
  if (!(a >= 0.0)) throw std::invalid_argument("shift must be >= 0");
  if (t == 0.0) return 0.0;
  // The density (delta + a + s)^(p-2) s is the unshifted density with the
  // shift folded into delta, so reuse its cancellation-safe evaluation.
  PDeltaParams shifted = prm;
  shifted.delta = prm.delta + a;
  shifted.delta0 = std::fmax(prm.delta0, shifted.delta);
  return phi(shifted, t);
}

double phi_shifted_prime(const PDeltaParams& prm, double a, double t) {
  check_t(t);
  if (!(a >= 0.0)) throw std::invalid_argument("shift must be >= 0");
  if (t == 0.0) return 0.0;
  return std::pow(prm.delta + a + t, prm.p - 2.0) * t;
}

}  // namespace pstruct
