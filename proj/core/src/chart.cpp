// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#include "pstruct/chart.hpp"

#include <cmath>
#include <stdexcept>

#include "pstruct/errors.hpp"

namespace pstruct {
namespace {

struct Ramp {
  double v = 0.0, d1 = 0.0, d2 = 0.0;
};

// Quintic smootherstep 6s^5 - 15s^4 + 10s^3: C^2 across both clamp points.
Ramp smooth_up(double s) {
  if (s <= 0.0) return {0.0, 0.0, 0.0};
  if (s >= 1.0) return {1.0, 0.0, 0.0};
  const double s2 = s * s, s3 = s2 * s;
  return {s3 * (10.0 + s * (-15.0 + 6.0 * s)), 30.0 * s2 * (1.0 + s * (-2.0 + s)),
          60.0 * s * (1.0 + s * (-3.0 + 2.0 * s))};
}

Ramp smooth_down(double s) {
  Ramp r = smooth_up(s);
  return {1.0 - r.v, -r.d1, -r.d2};
}

// Lateral profile: 1 on |u| <= 1/2, ramp on 1/2 <= |u| <= 3/4, 0 beyond.
Ramp lateral(double u) {
  const double au = std::abs(u);
  Ramp r = smooth_down((au - 0.5) * 4.0);
  const double sg = u < 0.0 ? -1.0 : 1.0;
  return {r.v, r.d1 * 4.0 * sg, r.d2 * 16.0};
}

// Vertical profile: 1 for v <= 1/2 (in particular below the graph), ramp on
// [1/2, 3/4], 0 beyond. Constant below the graph keeps the cutoff C^2 on the
// whole plane even though the box is one-sided.
Ramp vertical(double v) {
  Ramp r = smooth_down((v - 0.5) * 4.0);
  return {r.v, r.d1 * 4.0, r.d2 * 16.0};
}

// One-dimensional radial plateau profile of the interior cutoff.
Ramp radial_profile(const Chart& c, double r) {
  Ramp up{1.0, 0.0, 0.0};
  if (c.plateau_lo > c.support_lo) {
    const double w = c.plateau_lo - c.support_lo;
    Ramp s = smooth_up((r - c.support_lo) / w);
    up = {s.v, s.d1 / w, s.d2 / (w * w)};
  }
  const double w = c.support_hi - c.plateau_hi;
  Ramp dn = smooth_down((r - c.plateau_hi) / w);
  dn = {dn.v, dn.d1 / w, dn.d2 / (w * w)};
  return {up.v * dn.v, up.d1 * dn.v + up.v * dn.d1,
          up.d2 * dn.v + 2.0 * up.d1 * dn.d1 + up.v * dn.d2};
}

ChartGraph circle_graph(double rho, double sign) {
  // sign = -1: domain inside the circle (graph opens away from the center);
  // sign = +1: domain outside (annulus inner circle).
  return {[rho, sign](double x) { return sign * (std::sqrt(rho * rho - x * x) - rho); },
          [rho, sign](double x) { return -sign * x / std::sqrt(rho * rho - x * x); },
          [rho, sign](double x) {
            const double q = rho * rho - x * x;
            return -sign * rho * rho / (q * std::sqrt(q));
          }};
}

void append_circle_charts(std::vector<Chart>& out, double rho, double sign, double r_max,
                          double rp_cap) {
  double R = 0.98 * rho * r_max / std::sqrt(1.0 + r_max * r_max);
  const double Rp = std::min(R, rp_cap);
  // Keep box width and depth comparable so the curvature sag of the graph
  // stays well inside the covered band.
  R = std::min(R, 2.5 * Rp);
  const double half_arc = std::asin(std::min(1.0, R / (2.0 * rho)));
  const int n = static_cast<int>(std::ceil(kPi / (0.9 * half_arc)));
  for (int k = 0; k < n; ++k) {
    const double th = 2.0 * kPi * k / n;
    const double c = std::cos(th), s = std::sin(th);
    Chart ch;
    ch.kind = Chart::Kind::Boundary;
    ch.center = Vec2{rho * c, rho * s};
    ch.normal = Vec2{sign * c, sign * s};
    ch.tangent = Vec2{-ch.normal.y, ch.normal.x};
    ch.R = R;
    ch.Rp = Rp;
    ch.r_p = r_max;
    ch.graph = circle_graph(rho, sign);
    out.push_back(std::move(ch));
  }
}

}  // namespace

bool Chart::in_box(const Vec2& x, double frac) const {
  if (kind == Kind::Interior) {
    const double r = x.norm();
    return r >= plateau_lo - 1e-12 && r <= plateau_hi + 1e-12;
  }
  const Vec2 loc = to_local(x);
  if (std::abs(loc.x) >= frac * R) return false;
  const double av = graph.a(loc.x);
  return loc.y >= av - 1e-12 && loc.y <= av + frac * Rp;
}

CutoffValue cutoff_eval(const Chart& chart, const Vec2& x) {
  CutoffValue out;
  if (chart.kind == Chart::Kind::Interior) {
    const double r = x.norm();
    if (r >= chart.support_hi) return out;
    const Ramp eta = radial_profile(chart, r);
    out.value = eta.v;
    if (r < 1e-14) return out;  // inside the plateau, derivatives vanish
    const double ux = x.x / r, uy = x.y / r;
    out.gradient = Vec2{eta.d1 * ux, eta.d1 * uy};
    const double tang = eta.d1 / r;  // curvature term of the radial Hessian
    out.hessian.set(0, 0, eta.d2 * ux * ux + tang * uy * uy);
    out.hessian.set(1, 1, eta.d2 * uy * uy + tang * ux * ux);
    out.hessian.set(0, 1, (eta.d2 - tang) * ux * uy);
    return out;
  }

  const Vec2 loc = chart.to_local(x);
  if (std::abs(loc.x) >= chart.R) return out;
  const double a = chart.graph.a(loc.x);
  const double da = chart.graph.da(loc.x);
  const double dda = chart.graph.dda(loc.x);
  const double u = loc.x / chart.R;
  const double v = (loc.y - a) / chart.Rp;
  const Ramp B = lateral(u);
  const Ramp C = vertical(v);
  if (B.v == 0.0 && B.d1 == 0.0 && C.v == 0.0 && C.d1 == 0.0) return out;

  const double iR = 1.0 / chart.R, iRp = 1.0 / chart.Rp;
  // Chain rule through u = x1/R, v = (x2 - a(x1))/Rp in local coordinates.
  const double g1 = B.d1 * iR * C.v - B.v * C.d1 * da * iRp;
  const double g2 = B.v * C.d1 * iRp;
  const double h11 = B.d2 * iR * iR * C.v - 2.0 * B.d1 * iR * C.d1 * da * iRp +
                     B.v * (C.d2 * da * da * iRp * iRp - C.d1 * dda * iRp);
  const double h12 = B.d1 * iR * C.d1 * iRp - B.v * C.d2 * da * iRp * iRp;
  const double h22 = B.v * C.d2 * iRp * iRp;

  out.value = B.v * C.v;
  const Vec2 t = chart.tangent, n = chart.normal;
  out.gradient = t * g1 + n * g2;
  out.hessian.set(0, 0, h11 * t.x * t.x + 2.0 * h12 * t.x * n.x + h22 * n.x * n.x);
  out.hessian.set(1, 1, h11 * t.y * t.y + 2.0 * h12 * t.y * n.y + h22 * n.y * n.y);
  out.hessian.set(0, 1, h11 * t.x * t.y + h12 * (t.x * n.y + t.y * n.x) + h22 * n.x * n.y);
  return out;
}

std::vector<Chart> boundary_charts(const DomainSpec& spec, double r_max) {
  if (!(r_max > 0.0 && r_max < 1.0))
    throw std::invalid_argument("boundary_charts: r_max must lie in (0, 1)");
  if (!spec.smooth_boundary())
    throw NotSmoothBoundaryError("boundary charts require an analytic C2 boundary");
  std::vector<Chart> charts;
  if (spec.kind == DomainSpec::Kind::UnitDisk) {
    append_circle_charts(charts, 1.0, -1.0, r_max, 0.9);
  } else {
    const double gap = spec.r_out - spec.r_in;
    append_circle_charts(charts, spec.r_out, -1.0, r_max, 0.4 * gap);
    append_circle_charts(charts, spec.r_in, 1.0, r_max, 0.4 * gap);
  }
  return charts;
}

Chart interior_cutoff(const DomainSpec& spec, const std::vector<Chart>& charts) {
  if (!spec.smooth_boundary())
    throw NotSmoothBoundaryError("interior cutoff requires an analytic C2 boundary");
  if (charts.empty()) throw std::invalid_argument("interior_cutoff: empty chart cover");
  double band = charts.front().Rp;
  for (const Chart& c : charts) band = std::min(band, c.Rp);
  band *= 0.25;  // half boxes cover at least this boundary band

  Chart c;
  c.kind = Chart::Kind::Interior;
  if (spec.kind == DomainSpec::Kind::UnitDisk) {
    c.plateau_lo = c.support_lo = 0.0;
    c.plateau_hi = 1.0 - band;
    c.support_hi = 1.0 - 0.5 * band;
  } else {
    c.support_lo = spec.r_in + 0.5 * band;
    c.plateau_lo = spec.r_in + band;
    c.plateau_hi = spec.r_out - band;
    c.support_hi = spec.r_out - 0.5 * band;
  }
  return c;
}

}  // namespace pstruct
