// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "pstruct/chart.hpp"
#include "pstruct/errors.hpp"

using namespace pstruct;

namespace {

double fd_partial(const Chart& c, const Vec2& x, int axis, double h) {
  Vec2 xp = x, xm = x;
  (axis == 0 ? xp.x : xp.y) += h;
  (axis == 0 ? xm.x : xm.y) -= h;
  return (cutoff_eval(c, xp).value - cutoff_eval(c, xm).value) / (2.0 * h);
}

}  // namespace

TEST_CASE("unit disk cover at the default slope bound") {
  const auto charts = boundary_charts(DomainSpec::unit_disk(), 0.5);
  REQUIRE(charts.size() == 16);
  for (const auto& c : charts) {
    CHECK(c.kind == Chart::Kind::Boundary);
    CHECK(std::hypot(c.center.x, c.center.y) == doctest::Approx(1.0).epsilon(1e-13));
    // inward normal points to the origin
    CHECK(c.normal.x == doctest::Approx(-c.center.x).epsilon(1e-13));
    CHECK(c.normal.y == doctest::Approx(-c.center.y).epsilon(1e-13));
    CHECK(c.tangent.dot(c.normal) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(c.R > 0.0);
    CHECK(c.Rp > 0.0);
    CHECK(c.r_p > 0.0);
    CHECK(c.r_p < 1.0);
    // graph normalization and the circle formula
    CHECK(c.graph.a(0.0) == 0.0);
    CHECK(c.graph.da(0.0) == 0.0);
    for (double t : {-0.9, -0.3, 0.4, 0.8}) {
      const double x1 = t * c.R;
      const double want = 1.0 - std::sqrt(1.0 - x1 * x1);
      CHECK(c.graph.a(x1) == doctest::Approx(want).epsilon(1e-12));
      CHECK(std::fabs(c.graph.da(x1)) <= c.r_p * (1.0 + 1e-12));
      // graph point maps back onto the unit circle
      const Vec2 g = c.to_global({x1, c.graph.a(x1)});
      CHECK(std::hypot(g.x, g.y) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("smaller slope bound means more, smaller charts") {
  const auto coarse = boundary_charts(DomainSpec::unit_disk(), 0.5);
  const auto fine = boundary_charts(DomainSpec::unit_disk(), 0.25);
  CHECK(fine.size() > coarse.size());
  CHECK(fine.front().R < coarse.front().R);
  for (const auto& c : fine) CHECK(c.r_p <= 0.25 + 1e-12);
}

TEST_CASE("annulus charts cover both circles") {
  const auto charts = boundary_charts(DomainSpec::annulus(0.5, 1.0), 0.5);
  int inner = 0, outer = 0;
  for (const auto& c : charts) {
    const double rc = std::hypot(c.center.x, c.center.y);
    if (std::fabs(rc - 0.5) < 1e-12) {
      ++inner;
      // inward normal of the domain points away from the origin here
      CHECK(c.normal.dot(c.center) > 0.0);
    } else {
      CHECK(std::fabs(rc - 1.0) < 1e-12);
      ++outer;
      CHECK(c.normal.dot(c.center) < 0.0);
    }
  }
  CHECK(inner >= 16);  // smaller circle needs at least the disk count
  CHECK(outer >= 16);
}

TEST_CASE("non-smooth domains are rejected") {
  CHECK_THROWS_AS(boundary_charts(DomainSpec::unit_square(), 0.5), NotSmoothBoundaryError);
  CHECK_THROWS_AS(boundary_charts(DomainSpec::mesh_file("x.txt"), 0.5), NotSmoothBoundaryError);
  CHECK_THROWS_AS(boundary_charts(DomainSpec::unit_disk(), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(boundary_charts(DomainSpec::unit_disk(), 1.0), std::invalid_argument);
}

TEST_CASE("cutoff is a plateau on the half box and vanishes outside the 3/4 box") {
  const auto charts = boundary_charts(DomainSpec::unit_disk(), 0.5);
  const Chart& c = charts.front();
  // points strictly inside the half box: value 1, derivatives 0
  for (double t : {-0.45, 0.0, 0.45}) {
    const double x1 = t * c.R;
    const Vec2 x = c.to_global({x1, c.graph.a(x1) + 0.3 * c.Rp});
    const CutoffValue v = cutoff_eval(c, x);
    CHECK(v.value == 1.0);
    CHECK(v.gradient.x == 0.0);
    CHECK(v.gradient.y == 0.0);
    CHECK(v.hessian.norm() == 0.0);
  }
  // outside the 3/4 box (but inside the column): identically 0
  {
    const Vec2 x = c.to_global({0.8 * c.R, c.graph.a(0.8 * c.R) + 0.2 * c.Rp});
    const CutoffValue v = cutoff_eval(c, x);
    CHECK(v.value == 0.0);
    CHECK(v.gradient.x == 0.0);
    CHECK(v.hessian.norm() == 0.0);
  }
  // far outside the column: 0 without throwing
  CHECK(cutoff_eval(c, {-2.0, -2.0}).value == 0.0);
}

TEST_CASE("cutoff derivatives match finite differences in the transition band") {
  const auto charts = boundary_charts(DomainSpec::unit_disk(), 0.5);
  const Chart& c = charts[3];
  const double h = 1e-6;
  for (double t : {0.55, 0.62, 0.7}) {
    const double x1 = t * c.R;
    const Vec2 x = c.to_global({x1, c.graph.a(x1) + 0.6 * c.Rp});
    const CutoffValue v = cutoff_eval(c, x);
    CHECK(v.value > 0.0);
    CHECK(v.value < 1.0);
    CHECK(fd_partial(c, x, 0, h) == doctest::Approx(v.gradient.x).epsilon(1e-5));
    CHECK(fd_partial(c, x, 1, h) == doctest::Approx(v.gradient.y).epsilon(1e-5));
    // Hessian via finite differences of the analytic gradient
    for (int ai = 0; ai < 2; ++ai) {
      Vec2 xp = x, xm = x;
      (ai == 0 ? xp.x : xp.y) += h;
      (ai == 0 ? xm.x : xm.y) -= h;
      const Vec2 gp = cutoff_eval(c, xp).gradient;
      const Vec2 gm = cutoff_eval(c, xm).gradient;
      CHECK((gp.x - gm.x) / (2.0 * h) == doctest::Approx(v.hessian(ai, 0)).epsilon(2e-4));
      CHECK((gp.y - gm.y) / (2.0 * h) == doctest::Approx(v.hessian(ai, 1)).epsilon(2e-4));
    }
  }
}

TEST_CASE("interior cutoff plateaus in the bulk and dies at the boundary") {
  const DomainSpec disk = DomainSpec::unit_disk();
  const auto charts = boundary_charts(disk, 0.5);
  const Chart inner = interior_cutoff(disk, charts);
  CHECK(inner.kind == Chart::Kind::Interior);
  CHECK(cutoff_eval(inner, {0.0, 0.0}).value == 1.0);
  CHECK(cutoff_eval(inner, {0.3, 0.1}).value == 1.0);
  const CutoffValue rim = cutoff_eval(inner, {0.9999, 0.0});
  CHECK(rim.value == 0.0);
  // C^2: gradient matches finite differences in the ramp
  const Vec2 x{0.5 * (inner.plateau_hi + inner.support_hi), 0.0};
  const CutoffValue v = cutoff_eval(inner, x);
  CHECK(v.value > 0.0);
  CHECK(v.value < 1.0);
  CHECK(fd_partial(inner, x, 0, 1e-6) == doctest::Approx(v.gradient.x).epsilon(1e-5));
}

TEST_CASE("partition of unity: squared cutoffs cover the domain") {
  for (const DomainSpec& spec : {DomainSpec::unit_disk(), DomainSpec::annulus(0.4, 1.0)}) {
    const auto charts = boundary_charts(spec, 0.5);
    const Chart inner = interior_cutoff(spec, charts);
    const Mesh m = build_mesh(spec, 3);
    // dense interior sample points: element barycenters and nodes
    auto cover = [&](const Vec2& x) {
      double s = cutoff_eval(inner, x).value;
      s *= s;
      for (const auto& c : charts) {
        const double v = cutoff_eval(c, x).value;
        s += v * v;
      }
      return s;
    };
    for (int e = 0; e < m.n_elements(); ++e) {
      const auto& [i, j, k] = m.elements[e];
      const Vec2 b{(m.nodes[i].x + m.nodes[j].x + m.nodes[k].x) / 3.0,
                   (m.nodes[i].y + m.nodes[j].y + m.nodes[k].y) / 3.0};
      CHECK(cover(b) >= 1.0 - 1e-9);
    }
    for (const Vec2& x : m.nodes) CHECK(cover(x) >= 1.0 - 1e-9);
    // dense boundary sampling: every boundary point lies in some half box
    for (int k = 0; k < 720; ++k) {
      const double th = kPi * k / 360.0;
      const double r_out = spec.kind == DomainSpec::Kind::Annulus ? spec.r_out : 1.0;
      const Vec2 x{r_out * std::cos(th), r_out * std::sin(th)};
      bool covered = false;
      for (const auto& c : charts)
        if (c.in_box(x, 0.5)) covered = true;
      CHECK(covered);
      CHECK(cover(x) >= 1.0 - 1e-9);
    }
  }
}
