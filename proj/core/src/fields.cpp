// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#include "pstruct/fields.hpp"

#include <cmath>

#include "pstruct/errors.hpp"

namespace pstruct {
namespace {

// (sin(pi x) sin(pi y), 0)
AnalyticVectorField sine_x() {
  AnalyticVectorField f;
  f.value = [](const Vec2& x) { return Vec2{std::sin(kPi * x.x) * std::sin(kPi * x.y), 0.0}; };
  f.jacobian = [](const Vec2& x) {
    MatD j(2);
    j(0, 0) = kPi * std::cos(kPi * x.x) * std::sin(kPi * x.y);
    j(0, 1) = kPi * std::sin(kPi * x.x) * std::cos(kPi * x.y);
    return j;
  };
  f.hessians = [](const Vec2& x) {
    const double p2 = kPi * kPi;
    SymTensor h0(2), h1(2);
    h0.set(0, 0, -p2 * std::sin(kPi * x.x) * std::sin(kPi * x.y));
    h0.set(1, 1, -p2 * std::sin(kPi * x.x) * std::sin(kPi * x.y));
    h0.set(0, 1, p2 * std::cos(kPi * x.x) * std::cos(kPi * x.y));
    return std::array<SymTensor, 2>{h0, h1};
  };
  return f;
}

// (sin(pi x) sin(pi y), sin(2 pi x) sin(pi y))
AnalyticVectorField sine_2() {
  AnalyticVectorField f = sine_x();
  auto base = f;
  f.value = [base](const Vec2& x) {
    Vec2 v = base.value(x);
    v.y = std::sin(2.0 * kPi * x.x) * std::sin(kPi * x.y);
    return v;
  };
  f.jacobian = [base](const Vec2& x) {
    MatD j = base.jacobian(x);
    j(1, 0) = 2.0 * kPi * std::cos(2.0 * kPi * x.x) * std::sin(kPi * x.y);
    j(1, 1) = kPi * std::sin(2.0 * kPi * x.x) * std::cos(kPi * x.y);
    return j;
  };
  f.hessians = [base](const Vec2& x) {
    auto h = base.hessians(x);
    const double p2 = kPi * kPi;
    h[1].set(0, 0, -4.0 * p2 * std::sin(2.0 * kPi * x.x) * std::sin(kPi * x.y));
    h[1].set(0, 1, 2.0 * p2 * std::cos(2.0 * kPi * x.x) * std::cos(kPi * x.y));
    h[1].set(1, 1, -p2 * std::sin(2.0 * kPi * x.x) * std::sin(kPi * x.y));
    return h;
  };
  return f;
}

// (1 - |x|^2) c
AnalyticVectorField disk_bubble() {
  const Vec2 c{1.0, 0.5};
  AnalyticVectorField f;
  f.value = [c](const Vec2& x) { return c * (1.0 - x.x * x.x - x.y * x.y); };
  f.jacobian = [c](const Vec2& x) {
    MatD j(2);
    j(0, 0) = -2.0 * c.x * x.x;
    j(0, 1) = -2.0 * c.x * x.y;
    j(1, 0) = -2.0 * c.y * x.x;
    j(1, 1) = -2.0 * c.y * x.y;
    return j;
  };
  f.hessians = [c](const Vec2&) {
    SymTensor h0(2), h1(2);
    h0.set(0, 0, -2.0 * c.x);
    h0.set(1, 1, -2.0 * c.x);
    h1.set(0, 0, -2.0 * c.y);
    h1.set(1, 1, -2.0 * c.y);
    return std::array<SymTensor, 2>{h0, h1};
  };
  return f;
}

// g(s) x with s = |x|^2 and g(s) = (1 - s)^2: the gradient is g(s) I at the
// unit circle boundary, where g = g' * (boundary terms) = 0, so the
// symmetric gradient decays isotropically there.
AnalyticVectorField disk_radial() {
  AnalyticVectorField f;
  f.value = [](const Vec2& x) {
    const double g = (1.0 - x.x * x.x - x.y * x.y);
    return x * (g * g);
  };
  f.jacobian = [](const Vec2& x) {
    const double s = x.x * x.x + x.y * x.y;
    const double g = (1.0 - s) * (1.0 - s);
    const double dg = -2.0 * (1.0 - s);
    const double xs[2] = {x.x, x.y};
    MatD j(2);
    for (int i = 0; i < 2; ++i)
      for (int k = 0; k < 2; ++k) j(i, k) = (i == k ? g : 0.0) + 2.0 * dg * xs[i] * xs[k];
    return j;
  };
  f.hessians = [](const Vec2& x) {
    const double s = x.x * x.x + x.y * x.y;
    const double dg = -2.0 * (1.0 - s);
    const double ddg = 2.0;
    const double xs[2] = {x.x, x.y};
    std::array<SymTensor, 2> h{SymTensor(2), SymTensor(2)};
    for (int c = 0; c < 2; ++c)
      for (int i = 0; i < 2; ++i)
        for (int k = i; k < 2; ++k) {
          double v = 4.0 * ddg * xs[i] * xs[k] * xs[c] + 2.0 * dg * ((i == k ? 1.0 : 0.0) * xs[c]);
          v += 2.0 * dg * ((c == k ? 1.0 : 0.0) * xs[i] + (c == i ? 1.0 : 0.0) * xs[k]);
          h[c].set(i, k, v);
        }
    return h;
  };
  return f;
}

}  // namespace

SymTensor sym_grad(const AnalyticVectorField& u, const Vec2& x) { return sym(u.jacobian(x)); }

AnalyticVectorField scale_field(const AnalyticVectorField& u, double amplitude) {
  AnalyticVectorField f;
  f.value = [u, amplitude](const Vec2& x) { return u.value(x) * amplitude; };
  f.jacobian = [u, amplitude](const Vec2& x) {
    MatD j = u.jacobian(x);
    j *= amplitude;
    return j;
  };
  f.hessians = [u, amplitude](const Vec2& x) {
    auto h = u.hessians(x);
    h[0] *= amplitude;
    h[1] *= amplitude;
    return h;
  };
  return f;
}

AnalyticVectorField named_solution(const std::string& name) {
  if (name == "sine-x") return sine_x();
  if (name == "sine-2") return sine_2();
  if (name == "disk-bubble") return disk_bubble();
  if (name == "disk-radial") return disk_radial();
  throw ConfigError("unknown manufactured solution \"" + name + "\"");
}

VectorField named_source(const std::string& name) {
  if (name == "const-x") return [](const Vec2&) { return Vec2{1.0, 0.0}; };
  if (name == "const-y") return [](const Vec2&) { return Vec2{0.0, 1.0}; };
  if (name == "sine-load")
    return [](const Vec2& x) {
      return Vec2{std::sin(kPi * x.x) * std::sin(kPi * x.y),
                  std::cos(kPi * x.x) * std::cos(kPi * x.y)};
    };
  throw ConfigError("unknown load field \"" + name + "\"");
}

VectorField manufactured_rhs(const StressModel& m, const AnalyticVectorField& u) {
  return [m, u](const Vec2& x) {
    const SymTensor du = sym(u.jacobian(x));
    const auto h = u.hessians(x);
    Vec2 f;
    double* out[2] = {&f.x, &f.y};
    for (int j = 0; j < 2; ++j) {
      SymTensor ddu(2);  // d/dx_j of the symmetric gradient
      for (int k = 0; k < 2; ++k)
        for (int l = k; l < 2; ++l) ddu.set(k, l, 0.5 * (h[l](j, k) + h[k](j, l)));
      const SymTensor t = stress_deriv(m, du, ddu);
      for (int i = 0; i < 2; ++i) *out[i] -= t(i, j);
    }
    return f;
  };
}

}  // namespace pstruct
