// SPDX-License-Identifier: Apache-2.0
//
// Release gate: ten end-to-end checks of the library's quantitative
// guarantees, each printed as one [PASS]/[FAIL] line. Exits 0 only when
// every check passes, 5 otherwise. All tolerances are pinned here.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pstruct/chart.hpp"
#include "pstruct/equivalence.hpp"
#include "pstruct/fem.hpp"
#include "pstruct/fields.hpp"
#include "pstruct/mesh.hpp"
#include "pstruct/newton.hpp"
#include "pstruct/regularity.hpp"
#include "pstruct/sampling.hpp"
#include "pstruct/stress.hpp"
#include "pstruct/tangential.hpp"

using namespace pstruct;

namespace {

constexpr std::uint64_t kSeed = 20260815ULL;

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& msg) {
  if (!ok) throw CheckFailure(msg);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

PDeltaParams params(double p, double delta, double mu = 1.0) {
  PDeltaParams prm;
  prm.p = p;
  prm.delta = delta;
  prm.mu = mu;
  prm.delta0 = std::fmax(2.0, delta);
  return prm;
}

double fit_slope(const std::vector<double>& log_h, const std::vector<double>& log_e) {
  double mh = 0.0, me = 0.0;
  for (std::size_t i = 0; i < log_h.size(); ++i) {
    mh += log_h[i];
    me += log_e[i];
  }
  mh /= static_cast<double>(log_h.size());
  me /= static_cast<double>(log_e.size());
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < log_h.size(); ++i) {
    num += (log_h[i] - mh) * (log_e[i] - me);
    den += (log_h[i] - mh) * (log_h[i] - mh);
  }
  return num / den;
}

double rel_change(double fine, double coarse) {
  return std::fabs(fine - coarse) / std::fabs(coarse);
}

// One solved disk configuration, kept for the split and window checks.
struct SolvedDisk {
  double p = 0.0;
  double delta = 0.0;
  std::vector<std::unique_ptr<Mesh>> chain;  // owns the meshes the field points at
  std::optional<DiscreteField> u5;
  std::optional<StressModel> model;  // final-stage law (shifted when delta = 0)
  double grad_f4 = 0.0, grad_f5 = 0.0;
  double w2q4 = 0.0, w2q5 = 0.0;
  BoundarySplit split4, split5;
};

struct Context {
  // per exponent p: sampled windows of the three quadratic-form ratios,
  // unioned over the shift grid {0, 1e-3, 1e-2, 1e-1, 1}
  std::map<double, std::array<RatioWindow, 3>> suite_windows;
  std::vector<SolvedDisk> disks;
  double radial_tangential = -1.0;
  double radial_normal = -1.0;
};

// ---------------------------------------------------------------------------
// 1. Randomized constitutive ratios: the two scalar ratios stay inside their
//    exact bounds; the nine tensor ratios are bounded with small drift of the
//    sampled window across the shift grid.
void check_ratio_windows(Context& ctx, std::vector<std::string>& notes) {
  const long n = 10000;
  const std::size_t n_shift_rows = 5;  // shifts {0, 1e-3, 1e-2, 1e-1, 1}
  for (double p : {1.2, 1.5, 1.8, 2.0}) {
    const auto reports = equivalence_suite(params(p, 0.0), n, kSeed);
    double worst_drift = 0.0;
    std::array<RatioWindow, 3>& stash = ctx.suite_windows[p];
    for (const auto& rep : reports) {
      require(rep.per_delta.size() >= n_shift_rows, rep.name + ": missing shift rows");
      RatioWindow uni;
      double widest = 0.0;
      for (std::size_t i = 0; i < n_shift_rows; ++i) {
        const RatioWindow& w = rep.per_delta[i];
        require(w.valid() && std::isfinite(w.min) && std::isfinite(w.max),
                rep.name + ": invalid window at p = " + fmt(p));
        require(w.count >= n, rep.name + ": undersampled window");
        uni.min = std::fmin(uni.min, w.min);
        uni.max = std::fmax(uni.max, w.max);
        uni.count += w.count;
        widest = std::fmax(widest, w.width());
      }
      if (rep.name == "phi2_t_over_phi1") {
        require(uni.min >= p - 1.0 - 1e-12 && uni.max <= 1.0 + 1e-12,
                "curvature ratio outside [p-1, 1] at p = " + fmt(p) + ": [" + fmt(uni.min) +
                    ", " + fmt(uni.max) + "]");
      } else if (rep.name == "phi1_t_over_phi") {
        require(uni.min >= p - 1e-9 && uni.max <= 2.0 + 1e-9,
                "slope ratio outside [p, 2] at p = " + fmt(p) + ": [" + fmt(uni.min) + ", " +
                    fmt(uni.max) + "]");
      } else {
        // constant-collapse quantities (p = 2) leave zero-width rows
        const double drift = widest > 0.0 ? uni.width() / widest - 1.0
                                          : (uni.width() > 0.0 ? 1e300 : 0.0);
        worst_drift = std::fmax(worst_drift, drift);
        require(drift < 0.05, rep.name + " drift " + fmt(drift) + " >= 5% at p = " + fmt(p));
      }
      if (rep.name == "pq_over_phi2_weighted") stash[0] = uni;
      if (rep.name == "pq_over_df_sq") stash[1] = uni;
      if (rep.name == "pq_over_ds_sq_scaled") stash[2] = uni;
    }
    notes.push_back("p = " + fmt(p) + ": worst shift drift " + fmt(worst_drift));
  }
}

// ---------------------------------------------------------------------------
// 2. Analytic derivatives against central finite differences: the stress
//    Jacobian on random tensors and the assembled residual as the gradient
//    of the discrete energy.
void check_derivative_oracles(Context&, std::vector<std::string>& notes) {
  TensorSampler s(kSeed + 1);
  double worst_tensor = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double p = 1.05 + 0.95 * s.uniform01();
    const double delta = i % 4 == 0 ? 0.0 : std::pow(10.0, -4.0 + 4.0 * s.uniform01());
    const double mu = std::pow(10.0, -1.0 + 2.0 * s.uniform01());
    const StressModel m = StressModel::canonical(params(p, delta, mu));
    const int dim = i % 2 == 0 ? 2 : 3;
    const double r = std::pow(10.0, -3.0 + 6.0 * s.uniform01());
    SymTensor q = s.unit_sym(dim);
    q *= r;
    const SymTensor dq = s.unit_sym(dim);
    const double h = 1e-5 * (m.shift() + r);

    SymTensor qp = q, qm = q, step = dq;
    step *= h;
    qp += step;
    qm -= step;
    SymTensor fd = stress(m, qp);
    fd -= stress(m, qm);
    fd *= 1.0 / (2.0 * h);
    const SymTensor want = stress_jacobian(m, q).apply(dq);
    SymTensor gap = fd;
    gap -= want;
    const double rel = gap.norm() / want.norm();
    worst_tensor = std::fmax(worst_tensor, rel);
  }
  require(worst_tensor < 1e-6,
          "stress jacobian vs finite differences: worst relative error " + fmt(worst_tensor));

  const Mesh mesh = build_mesh(DomainSpec::unit_square(), 2);
  const std::vector<double> b = load_vector(mesh, named_source("sine-load"));
  double worst_grad = 0.0;
  long tested = 0;
  DiscreteField u(mesh);
  for (int i = 0; tested < 1000; ++i) {
    if (i % 25 == 0) {  // fresh random state
      for (int k = 0; k < mesh.n_nodes(); ++k)
        if (!mesh.on_boundary[k]) u.set_node(k, {0.4 * s.normal(), 0.4 * s.normal()});
    }
    const double p = 1.05 + 0.95 * s.uniform01();
    const double delta = i % 3 == 0 ? 0.0 : s.uniform01();
    const StressModel m = StressModel::canonical(params(p, delta, 1.0 + s.uniform01()));
    const std::vector<double> r = assemble_residual(m, u, b);
    double rmax = 0.0;
    for (double v : r) rmax = std::fmax(rmax, std::fabs(v));
    // pick an interior dof carrying a meaningful residual entry
    const int dof = static_cast<int>(s.uniform01() * static_cast<double>(r.size())) %
                    static_cast<int>(r.size());
    if (mesh.on_boundary[dof / 2] || std::fabs(r[dof]) < 1e-2 * rmax) continue;
    const double h = 1e-7;
    DiscreteField up = u, um = u;
    up.values[dof] += h;
    um.values[dof] -= h;
    const double fd = (energy(m, up, b) - energy(m, um, b)) / (2.0 * h);
    worst_grad = std::fmax(worst_grad, std::fabs(fd - r[dof]) / std::fabs(r[dof]));
    ++tested;
  }
  require(worst_grad < 1e-6,
          "energy gradient vs residual: worst relative error " + fmt(worst_grad));
  notes.push_back("worst stress-jacobian error " + fmt(worst_tensor) +
                  ", worst energy-gradient error " + fmt(worst_grad));
}

// ---------------------------------------------------------------------------
// 3. The quadratic form of the stress derivative respects its coercivity
//    floor (p-1) mu phi''(|Q|) |dQ|^2 and the componentwise growth cap
//    mu (3-p)/(p-1) phi''(|Q|) |dQ|.
void check_coercivity_growth(Context&, std::vector<std::string>& notes) {
  TensorSampler s(kSeed + 2);
  const double shifts[] = {0.0, 1e-3, 1e-2, 1e-1, 1.0};
  long samples = 0, violations = 0;
  for (double p : {1.2, 1.5, 1.8, 2.0}) {
    const double mu_lo = 0.1;
    notes.push_back("p = " + fmt(p) + ": growth constant (3-p)/(p-1) mu, mu-normalized " +
                    fmt((3.0 - p) / (p - 1.0)));
    for (double delta : shifts) {
      for (int i = 0; i < 500; ++i) {
        const double mu = mu_lo * std::pow(100.0, s.uniform01());
        const PDeltaParams prm = params(p, delta, mu);
        const StressModel m = StressModel::canonical(prm);
        const double r = s.magnitude();
        SymTensor q = s.unit_sym(3);
        q *= r;
        SymTensor dq = i % 3 == 0   ? q
                       : i % 3 == 1 ? s.unit_orthogonal_to(q)
                                    : s.unit_sym(3);
        dq *= 1.0 / dq.norm();
        const double phi2 = phi_second(prm, r);
        const double val = p_quantity(m, q, dq);
        const double floor = (p - 1.0) * mu * phi2 * dq.norm_squared();
        if (!(val >= floor * (1.0 - 1e-12))) ++violations;  // rounding guard only
        const double cap = mu * (3.0 - p) / (p - 1.0) * phi2 * dq.norm();
        if (!(stress_deriv(m, q, dq).norm() <= cap * (1.0 + 1e-12))) ++violations;
        ++samples;
      }
    }
  }
  notes.push_back(fmt(static_cast<double>(samples)) + " samples, " +
                  fmt(static_cast<double>(violations)) + " violations");
  require(samples >= 10000, "undersampled");
  require(violations == 0, "coercivity/growth violations: " + fmt(violations));
}

// ---------------------------------------------------------------------------
// 4. Quadratic law: Newton terminates in one step and the manufactured
//    solution converges at first order in H^1 over five refinement levels.
void check_quadratic_convergence(Context&, std::vector<std::string>& notes) {
  const PDeltaParams prm = params(2.0, 0.0);
  const StressModel m = StressModel::canonical(prm);
  const AnalyticVectorField ref = named_solution("sine-2");
  const VectorField f = manufactured_rhs(m, ref);
  std::vector<double> log_h, log_e;
  for (int level = 2; level <= 6; ++level) {
    const Mesh mesh = build_mesh(DomainSpec::unit_square(), level);
    const std::vector<double> b = load_vector(mesh, f);
    NewtonReport rep;
    const DiscreteField u = newton_solve(m, b, DiscreteField(mesh), {}, &rep);
    require(rep.iterations == 1, "level " + fmt(level) + ": " + fmt(rep.iterations) +
                                     " Newton steps for the quadratic law");
    const double e = std::hypot(l2_error(u, ref), h1_semi_error(u, ref));
    log_h.push_back(std::log(mesh.h_max));
    log_e.push_back(std::log(e));
    notes.push_back("level " + fmt(level) + ": H1 error " + fmt(e));
  }
  const double slope = fit_slope(log_h, log_e);
  notes.push_back("observed H1 order " + fmt(slope));
  require(slope >= 0.9, "H1 order " + fmt(slope) + " < 0.9");
}

// ---------------------------------------------------------------------------
// 5. Nonlinear law (p = 1.5, shift 0.1): the natural strain-transform error
//    decreases at order >= 0.8 and warm-started Newton stays within 15
//    iterations per level.
void check_nonlinear_convergence(Context&, std::vector<std::string>& notes) {
  const PDeltaParams prm = params(1.5, 0.1);
  const StressModel m = StressModel::canonical(prm);
  const AnalyticVectorField ref = named_solution("sine-2");
  const VectorField f = manufactured_rhs(m, ref);

  std::vector<std::unique_ptr<Mesh>> chain;
  chain.push_back(std::make_unique<Mesh>(build_mesh(DomainSpec::unit_square(), 2)));
  DiscreteField u(*chain.back());
  std::vector<double> log_h, log_e;
  for (int level = 2; level <= 6; ++level) {
    if (level > 2) {
      chain.push_back(std::make_unique<Mesh>(refine(*chain.back())));
      u = prolongate(u, *chain.back());
    }
    const Mesh& mesh = *chain.back();
    const std::vector<double> b = load_vector(mesh, f);
    NewtonReport rep;
    u = newton_solve(m, b, std::move(u), {}, &rep);
    require(rep.iterations <= 15, "level " + fmt(level) + ": " + fmt(rep.iterations) +
                                      " Newton iterations > 15 with a warm start");
    const double e = f_error(m, u, ref);
    log_h.push_back(std::log(mesh.h_max));
    log_e.push_back(std::log(e));
    notes.push_back("level " + fmt(level) + ": strain-transform error " + fmt(e) + ", " +
                    fmt(rep.iterations) + " iterations");
  }
  const double slope = fit_slope(log_h, log_e);
  notes.push_back("observed order " + fmt(slope));
  require(slope >= 0.8, "strain-transform order " + fmt(slope) + " < 0.8");
}

// ---------------------------------------------------------------------------
// 6. Disk refinement study: for four (p, shift) configurations the gradient
//    norm of the strain transform and the second-gradient indicator change
//    by less than 10% between the two finest levels. Degenerate laws run
//    the perturbation/shift cascade down to a 1e-5 shift.
void check_disk_stabilization(Context& ctx, std::vector<std::string>& notes) {
  const DomainSpec disk = DomainSpec::unit_disk();
  const auto charts = boundary_charts(disk, 0.5);
  const Chart interior = interior_cutoff(disk, charts);
  const VectorField load = named_source("sine-load");

  for (double p : {1.5, 1.8}) {
    for (double delta : {0.0, 0.1}) {
      SolvedDisk sc;
      sc.p = p;
      sc.delta = delta;
      const PDeltaParams prm = params(p, delta);
      const auto schedule = default_schedule(prm);
      sc.chain.push_back(std::make_unique<Mesh>(build_mesh(disk, 2)));
      DiscreteField u(*sc.chain.back());
      for (int level = 2; level <= 5; ++level) {
        if (level > 2) {
          sc.chain.push_back(std::make_unique<Mesh>(refine(*sc.chain.back())));
          u = prolongate(u, *sc.chain.back());
        }
        const Mesh& mesh = *sc.chain.back();
        const std::vector<double> b = load_vector(mesh, load);
        ContinuationReport rep;
        u = continuation_solve(prm, b, std::move(u), schedule, {}, &rep);
        if (level == 4 || level == 5) {
          const double gf = grad_f_l2_norm(prm, u);
          const double w2 = second_gradient_indicator(prm, u);
          const BoundarySplit split = boundary_split(prm, u, charts, interior);
          if (level == 4) {
            sc.grad_f4 = gf;
            sc.w2q4 = w2;
            sc.split4 = split;
          } else {
            sc.grad_f5 = gf;
            sc.w2q5 = w2;
            sc.split5 = split;
            if (delta == 0.0)
              require(rep.kappa_final == 1e-5,
                      "cascade did not end at the 1e-5 shift for p = " + fmt(p));
          }
        }
      }
      sc.u5.emplace(std::move(u));
      sc.model.emplace(stage_model(prm, schedule.back()));

      const double d_gf = rel_change(sc.grad_f5, sc.grad_f4);
      const double d_w2 = rel_change(sc.w2q5, sc.w2q4);
      notes.push_back("p = " + fmt(p) + ", shift " + fmt(delta) + ": grad-F " + fmt(sc.grad_f5) +
                      " (change " + fmt(d_gf) + "), indicator " + fmt(sc.w2q5) + " (change " +
                      fmt(d_w2) + ")");
      ctx.disks.push_back(std::move(sc));
      require(d_gf < 0.10, "grad-F change " + fmt(d_gf) + " >= 10% at p = " + fmt(p) +
                               ", shift " + fmt(delta));
      require(d_w2 < 0.10, "second-gradient change " + fmt(d_w2) + " >= 10% at p = " + fmt(p) +
                               ", shift " + fmt(delta));
    }
  }

  // radially symmetric manufactured case, used by the split check below
  {
    const PDeltaParams prm = params(1.5, 0.1);
    const StressModel m = StressModel::canonical(prm);
    const VectorField f = manufactured_rhs(m, named_solution("disk-radial"));
    std::vector<std::unique_ptr<Mesh>> chain;
    chain.push_back(std::make_unique<Mesh>(build_mesh(disk, 3)));
    DiscreteField u(*chain.back());
    for (int level = 3; level <= 5; ++level) {
      if (level > 3) {
        chain.push_back(std::make_unique<Mesh>(refine(*chain.back())));
        u = prolongate(u, *chain.back());
      }
      const std::vector<double> b = load_vector(*chain.back(), f);
      u = newton_solve(m, b, std::move(u));
    }
    const BoundarySplit split = boundary_split(prm, u, charts, interior);
    ctx.radial_tangential = split.tangential;
    ctx.radial_normal = split.normal;
    notes.push_back("radial case: tangential " + fmt(split.tangential) + ", normal " +
                    fmt(split.normal));
  }
}

// ---------------------------------------------------------------------------
// 7. Boundary split: on the finest disk level all three localized components
//    are finite and within 10% of the previous level; the radial case keeps
//    tangential mass below 5% of normal mass.
void check_boundary_split(Context& ctx, std::vector<std::string>& notes) {
  require(ctx.disks.size() == 4 && ctx.radial_normal >= 0.0,
          "requires the disk refinement cache (previous check must run)");
  for (const SolvedDisk& sc : ctx.disks) {
    const char* what[] = {"interior", "tangential", "normal"};
    const double v4[] = {sc.split4.interior, sc.split4.tangential, sc.split4.normal};
    const double v5[] = {sc.split5.interior, sc.split5.tangential, sc.split5.normal};
    for (int k = 0; k < 3; ++k) {
      require(std::isfinite(v5[k]) && v5[k] > 0.0,
              std::string(what[k]) + " component not finite and positive");
      const double d = rel_change(v5[k], v4[k]);
      notes.push_back("p = " + fmt(sc.p) + ", shift " + fmt(sc.delta) + ": " + what[k] + " " +
                      fmt(v5[k]) + " (change " + fmt(d) + ")");
      require(d < 0.10, std::string(what[k]) + " change " + fmt(d) + " >= 10% at p = " +
                            fmt(sc.p) + ", shift " + fmt(sc.delta));
    }
  }
  const double ratio = ctx.radial_tangential / ctx.radial_normal;
  notes.push_back("radial tangential/normal ratio " + fmt(ratio));
  require(ratio < 0.05, "radial tangential/normal ratio " + fmt(ratio) + " >= 0.05");
}

// ---------------------------------------------------------------------------
// 8. Continuation through shrinking perturbations lands on the direct
//    solution, and the recorded perturbation functional never grows by more
//    than 1% from stage to stage.
void check_continuation_consistency(Context&, std::vector<std::string>& notes) {
  const PDeltaParams prm = params(1.5, 0.1);
  const Mesh mesh = build_mesh(DomainSpec::unit_square(), 3);
  const std::vector<double> b = load_vector(mesh, named_source("const-x"));
  const DiscreteField direct = newton_solve(StressModel::canonical(prm), b, DiscreteField(mesh));
  const std::vector<ContinuationStage> schedule{{1e-2, 0.0}, {1e-4, 0.0}, {0.0, 0.0}};
  ContinuationReport rep;
  const DiscreteField cont =
      continuation_solve(prm, b, DiscreteField(mesh), schedule, {}, &rep);
  double gap = 0.0;
  for (std::size_t i = 0; i < direct.values.size(); ++i)
    gap = std::fmax(gap, std::fabs(direct.values[i] - cont.values[i]));
  notes.push_back("nodal max gap " + fmt(gap));
  require(gap < 1e-8, "continuation vs direct solve: nodal max gap " + fmt(gap));
  require(rep.apriori.size() == schedule.size(), "missing stage records");
  for (std::size_t i = 0; i < rep.apriori.size(); ++i) {
    notes.push_back("stage " + fmt(static_cast<double>(i)) + ": perturbation functional " +
                    fmt(rep.apriori[i]));
    if (i > 0)
      require(rep.apriori[i] <= 1.01 * rep.apriori[i - 1],
              "perturbation functional grew beyond 1% at stage " + fmt(static_cast<double>(i)));
  }
}

// ---------------------------------------------------------------------------
// 9. Discrete integration by parts holds to rounding noise on a flat chart,
//    and the forward difference quotient converges to the tangential
//    derivative at first order on curved charts.
void check_tangential_calculus(Context&, std::vector<std::string>& notes) {
  Chart flat;
  flat.kind = Chart::Kind::Boundary;
  flat.center = {0.0, 0.0};
  flat.tangent = {1.0, 0.0};
  flat.normal = {0.0, 1.0};
  flat.R = 0.5;
  flat.Rp = 0.5;
  flat.r_p = 0.1;
  flat.graph.a = [](double) { return 0.0; };
  flat.graph.da = [](double) { return 0.0; };
  flat.graph.dda = [](double) { return 0.0; };

  auto bump = [&flat](double phase) -> ScalarField {
    const double half = 7.0 / 8.0 * flat.R;
    return [half, phase, &flat](const Vec2& x) {
      const Vec2 loc = flat.to_local(x);
      if (std::fabs(loc.x) >= half) return 0.0;
      const double c = std::cos(0.5 * kPi * loc.x / half);
      return c * c * std::sin(phase + 3.0 * loc.x) * std::exp(-loc.y);
    };
  };
  double worst = 0.0;
  for (double h : {flat.R / 16.0, flat.R / 64.0, flat.R / 256.0}) {
    const SbpResult r = summation_by_parts_check(flat, bump(0.4), bump(1.7), h);
    require(r.scale > 0.0, "degenerate test fields");
    worst = std::fmax(worst, r.residual / r.scale);
  }
  notes.push_back("worst scaled integration-by-parts residual " + fmt(worst));
  require(worst < 1e-10, "scaled residual " + fmt(worst) + " >= 1e-10");

  const Chart curved = boundary_charts(DomainSpec::unit_disk(), 0.5).front();
  auto value = [](const Vec2& x) { return std::sin(2.0 * x.x + x.y); };
  DiffScalarField f;
  f.value = value;
  f.gradient = [](const Vec2& x) {
    const double c = std::cos(2.0 * x.x + x.y);
    return Vec2{2.0 * c, c};
  };
  const ScalarField dtau = tangential_deriv(curved, f);
  double min_slope = 1e300;
  for (double t : {-0.3, 0.1, 0.4}) {
    const Vec2 x = curved.to_global({t * curved.R, 0.05});
    const double want = dtau(x);
    std::vector<double> log_h, log_e;
    for (int k = 0; k < 8; ++k) {
      const double h = (curved.R / 16.0) / std::pow(2.0, k);
      const double err = std::fabs(tangential_diff(curved, value, h)(x) - want);
      require(err > 0.0, "difference quotient exactly equal to the derivative");
      log_h.push_back(std::log(h));
      log_e.push_back(std::log(err));
    }
    min_slope = std::fmin(min_slope, fit_slope(log_h, log_e));
  }
  notes.push_back("worst dyadic convergence order " + fmt(min_slope));
  require(min_slope >= 0.9, "difference-quotient order " + fmt(min_slope) + " < 0.9");
}

// ---------------------------------------------------------------------------
// 10. On every disk configuration solved above, the pointwise ratio windows
//     of the solved field sit inside the randomized windows of check 1, with
//     at most 0.1% outlier element pairs.
void check_field_windows(Context& ctx, std::vector<std::string>& notes) {
  require(ctx.disks.size() == 4, "requires the disk refinement cache (previous check must run)");
  for (const SolvedDisk& sc : ctx.disks) {
    const auto it = ctx.suite_windows.find(sc.p);
    require(it != ctx.suite_windows.end(), "no sampled windows for p = " + fmt(sc.p));
    const FieldCheckResult r = field_window_check(*sc.model, *sc.u5);
    require(r.checked > 0, "no checkable element pairs");
    notes.push_back("p = " + fmt(sc.p) + ", shift " + fmt(sc.delta) + ": " +
                    fmt(static_cast<double>(r.checked)) + " pairs, outlier fraction " +
                    fmt(r.outlier_fraction()));
    require(r.outlier_fraction() <= 1e-3,
            "outlier fraction " + fmt(r.outlier_fraction()) + " > 0.1%");
    for (int k = 0; k < 3; ++k) {
      const RatioWindow& w = it->second[k];
      require(r.ratio_min[k] >= w.min * (1.0 - 1e-9) && r.ratio_max[k] <= w.max * (1.0 + 1e-9),
              "field ratio window " + fmt(k) + " [" + fmt(r.ratio_min[k]) + ", " +
                  fmt(r.ratio_max[k]) + "] escapes the sampled window [" + fmt(w.min) + ", " +
                  fmt(w.max) + "] at p = " + fmt(sc.p) + ", shift " + fmt(sc.delta));
    }
  }
}

struct Criterion {
  const char* name;
  double budget_s;  // 0 = no runtime budget
  std::function<void(Context&, std::vector<std::string>&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"constitutive ratio windows: exact bounds and shift drift", 30.0, check_ratio_windows},
      {"analytic derivatives match finite differences", 30.0, check_derivative_oracles},
      {"coercivity floor and growth cap on random samples", 0.0, check_coercivity_growth},
      {"quadratic law: one Newton step, first-order H1 convergence", 120.0,
       check_quadratic_convergence},
      {"nonlinear law: strain-transform error order with warm starts", 300.0,
       check_nonlinear_convergence},
      {"disk refinement: diagnostic norms stabilize", 600.0, check_disk_stabilization},
      {"boundary split: stable components, radial tangential suppression", 0.0,
       check_boundary_split},
      {"perturbation continuation matches the direct solve", 0.0,
       check_continuation_consistency},
      {"integration by parts and tangential derivative limit", 0.0, check_tangential_calculus},
      {"solved-field ratio windows contained in sampled windows", 0.0, check_field_windows},
  };

  Context ctx;
  int passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    std::vector<std::string> notes;
    const auto t0 = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.run(ctx, notes);
    } catch (const std::exception& e) {
      failure = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (failure.empty() && c.budget_s > 0.0 && secs > c.budget_s)
      failure = "runtime " + fmt(secs) + " s exceeds the " + fmt(c.budget_s) + " s budget";
    if (failure.empty()) {
      ++passed;
      std::printf("[PASS] %2zu/%zu %s (%.1f s)\n", i + 1, criteria.size(), c.name, secs);
    } else {
      std::printf("[FAIL] %2zu/%zu %s (%.1f s): %s\n", i + 1, criteria.size(), c.name, secs,
                  failure.c_str());
    }
    for (const std::string& n : notes) std::printf("         %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %d/%zu checks passed\n", passed, criteria.size());
  return passed == static_cast<int>(criteria.size()) ? 0 : 5;
}
