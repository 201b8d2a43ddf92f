// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#include "pstruct/tangential.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pstruct/errors.hpp"

namespace pstruct {
namespace {

void check_args(const Chart& chart, double h, int alpha) {
  if (chart.kind != Chart::Kind::Boundary)
    throw std::invalid_argument("tangential calculus needs a boundary chart");
  if (alpha != 0)
    throw DimensionMismatchError("planar charts have a single tangential direction (alpha = 0)");
  if (!(std::abs(h) > 0.0 && std::abs(h) <= chart.R / 16.0))
    throw std::invalid_argument("tangential step must satisfy 0 < |h| <= R/16");
}

Vec2 translate_impl(const Chart& chart, const Vec2& x, double h) {
  const Vec2 loc = chart.to_local(x);
  if (std::abs(loc.x) >= chart.R || std::abs(loc.x + h) >= chart.R)
    throw SupportViolationError("tangential translate leaves the chart column");
  const double a0 = chart.graph.a(loc.x);
  const double a1 = chart.graph.a(loc.x + h);
  return chart.to_global(Vec2{loc.x + h, loc.y + a1 - a0});
}

}  // namespace

Vec2 tangential_translate(const Chart& chart, const Vec2& x, double h) {
  check_args(chart, h, 0);
  return translate_impl(chart, x, h);
}

ScalarField tangential_diff(const Chart& chart, ScalarField g, double h, int alpha) {
  check_args(chart, h, alpha);
  return [chart, g = std::move(g), h](const Vec2& x) {
    return (g(translate_impl(chart, x, h)) - g(x)) / h;
  };
}

ScalarField tangential_diff_back(const Chart& chart, ScalarField f, double h, int alpha) {
  check_args(chart, h, alpha);
  return [chart, f = std::move(f), h](const Vec2& x) {
    return (f(x) - f(translate_impl(chart, x, -h))) / h;
  };
}

ScalarField tangential_deriv(const Chart& chart, const DiffScalarField& g, int alpha) {
  check_args(chart, chart.R / 16.0, alpha);
  return [chart, g](const Vec2& x) {
    const Vec2 loc = chart.to_local(x);
    if (std::abs(loc.x) >= chart.R)
      throw SupportViolationError("tangential derivative outside the chart column");
    const Vec2 tau = chart.tangent + chart.graph.da(loc.x) * chart.normal;
    return tau.dot(g.gradient(x));
  };
}

SbpResult summation_by_parts_check(const Chart& chart, const ScalarField& f, const ScalarField& g,
                                   double h, int n_s, int n_w) {
  check_args(chart, h, 0);
  if (n_s < 8 || n_w < 1) throw std::invalid_argument("summation_by_parts_check: grid too small");

  const double span = 2.0 * (7.0 / 8.0) * chart.R;
  // Snap the grid step to an integer fraction of h: translated quadrature
  // points are then themselves quadrature points.
  const long m = std::max(1L, std::lround(h / (span / n_s)));
  const double ds = h / static_cast<double>(m);
  const long n = static_cast<long>(std::floor(span / ds));
  const double dw = chart.Rp / n_w;
  const double lo = -0.5 * span;

  std::vector<double> fv(static_cast<size_t>(n) * n_w), gv(static_cast<size_t>(n) * n_w);
  for (long j = 0; j < n; ++j) {
    const double s = lo + (j + 0.5) * ds;
    const double as = chart.graph.a(s);
    for (int k = 0; k < n_w; ++k) {
      const Vec2 x = chart.to_global(Vec2{s, as + (k + 0.5) * dw});
      fv[j * n_w + k] = f(x);
      gv[j * n_w + k] = g(x);
    }
  }

  // Graph coordinates make the translation a pure shift with unit Jacobian,
  // so both integrals run over the same values shifted by m cells.
  long double lhs = 0.0L, rhs = 0.0L, nf = 0.0L, ng = 0.0L;
  const long double cell = static_cast<long double>(ds) * dw;
  for (long j = 0; j < n; ++j) {
    for (int k = 0; k < n_w; ++k) {
      const long double fj = fv[j * n_w + k];
      const long double gj = gv[j * n_w + k];
      const long double gp = (j + m < n) ? gv[(j + m) * n_w + k] : 0.0L;
      const long double fm = (j - m >= 0) ? fv[(j - m) * n_w + k] : 0.0L;
      lhs += fj * (gp - gj) / h * cell;
      rhs += (fj - fm) / h * gj * cell;
      nf += fj * fj * cell;
      ng += gj * gj * cell;
    }
  }
  SbpResult out;
  out.residual = static_cast<double>(std::fabs(lhs + rhs));
  out.scale = static_cast<double>(std::sqrt(nf) * std::sqrt(ng));
  return out;
}

}  // namespace pstruct
