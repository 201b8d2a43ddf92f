// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#include "pstruct/harness.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <memory>

#include <json.hpp>

#include "pstruct/equivalence.hpp"
#include "pstruct/errors.hpp"
#include "pstruct/fields.hpp"
#include "pstruct/format.hpp"
#include "pstruct/regularity.hpp"
#include "pstruct/version.hpp"

namespace pstruct {
namespace {

using nlohmann::json;

class Artifacts {
 public:
  Artifacts(const ExperimentConfig& cfg, std::string dir)
      : cfg_(cfg), dir_(std::move(dir)), hash_(config_hash(cfg)) {
    std::filesystem::create_directories(dir_);
    t0_ = std::chrono::steady_clock::now();
  }

  std::ofstream open_csv(const std::string& name, const std::string& header) {
    std::ofstream os = open(name);
    os << "# config " << hash_ << "\n" << header << "\n";
    return os;
  }

  std::ofstream open(const std::string& name) {
    std::ofstream os(std::filesystem::path(dir_) / name, std::ios::binary);
    if (!os) throw Error("cannot write artifact \"" + name + "\"");
    names_.push_back(name);
    return os;
  }

  RunResult finish(json summary) {
    json m;
    m["experiment"] = cfg_.kind_name();
    m["config"] = json::parse(config_echo(cfg_));
    m["config_hash"] = hash_;
    m["version"] = PSTRUCT_VERSION_STRING;
    m["seed"] = cfg_.seed;
    m["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0_)
                       .count();
    names_.push_back("manifest.json");
    m["artifacts"] = names_;
    m["summary"] = std::move(summary);
    std::ofstream os(std::filesystem::path(dir_) / "manifest.json", std::ios::binary);
    if (!os) throw Error("cannot write manifest.json");
    os << m.dump(2) << "\n";
    RunResult r;
    r.manifest_path = (std::filesystem::path(dir_) / "manifest.json").string();
    r.artifacts = names_;
    return r;
  }

 private:
  const ExperimentConfig& cfg_;
  std::string dir_;
  std::string hash_;
  std::vector<std::string> names_;
  std::chrono::steady_clock::time_point t0_;
};

VectorField make_load(const ExperimentConfig& cfg) {
  if (cfg.load.kind == LoadSpec::Kind::Named) {
    const VectorField f = named_source(cfg.load.name);
    const double a = cfg.load.amplitude;
    return [f, a](const Vec2& x) { return f(x) * a; };
  }
  const AnalyticVectorField u = scale_field(named_solution(cfg.load.name), cfg.load.amplitude);
  return manufactured_rhs(StressModel::canonical(cfg.law), u);
}

void write_mesh_artifact(Artifacts& art, const Mesh& mesh) {
  std::ofstream os = art.open("mesh.txt");
  write_mesh(os, mesh);
}

std::string d(double v) { return format_double(v); }

RunResult run_check(const ExperimentConfig& cfg, Artifacts& art) {
  const std::vector<RatioReport> reports = equivalence_suite(cfg.law, cfg.samples, cfg.seed);
  {
    std::ofstream os = art.open_csv("windows.csv", "quantity,delta,min,max,width,count");
    for (const RatioReport& r : reports)
      for (std::size_t i = 0; i < r.delta_grid.size(); ++i) {
        const RatioWindow& w = r.per_delta[i];
        os << r.name << ',' << d(r.delta_grid[i]) << ',' << d(w.min) << ',' << d(w.max) << ','
           << d(w.width()) << ',' << w.count << "\n";
      }
  }
  double max_drift = 0.0;
  {
    std::ofstream os = art.open_csv(
        "summary.csv", "quantity,union_min,union_max,union_width,drift,origin_min,origin_max");
    for (const RatioReport& r : reports) {
      const RatioWindow u = r.union_window();
      const double dr = r.drift();
      max_drift = std::max(max_drift, dr);
      os << r.name << ',' << d(u.min) << ',' << d(u.max) << ',' << d(u.width()) << ',' << d(dr)
         << ',' << (r.origin.count > 0 ? d(r.origin.min) : "nan") << ','
         << (r.origin.count > 0 ? d(r.origin.max) : "nan") << "\n";
    }
  }
  json s;
  s["quantities"] = reports.size();
  s["samples_per_delta"] = reports.empty() ? 0 : reports.front().n_per_delta;
  s["max_drift"] = max_drift;
  return art.finish(std::move(s));
}

json stage_json(const ContinuationReport& rep) {
  json stages = json::array();
  for (std::size_t i = 0; i < rep.stages.size(); ++i)
    stages.push_back({{"eps", rep.stages[i].eps},
                      {"kappa", rep.stages[i].kappa},
                      {"iterations", rep.iterations[i]},
                      {"apriori", rep.apriori[i]},
                      {"phi_mass", rep.phi_mass[i]},
                      {"energy", rep.energy[i]}});
  return stages;
}

RunResult run_solve(const ExperimentConfig& cfg, Artifacts& art) {
  const Mesh mesh = build_mesh(cfg.domain, cfg.level);
  const VectorField f = make_load(cfg);
  const std::vector<double> b = load_vector(mesh, f);

  json s;
  DiscreteField u(mesh);
  {
    // An explicit eps/kappa override is a one-stage schedule; either way the
    // summary carries the stage records and the total Newton effort.
    const std::vector<ContinuationStage> schedule =
        cfg.eps > 0.0 || cfg.kappa > 0.0
            ? std::vector<ContinuationStage>{{cfg.eps, cfg.kappa}}
            : default_schedule(cfg.law);
    ContinuationReport rep;
    u = continuation_solve(cfg.law, b, std::move(u), schedule, cfg.solver, &rep);
    s["stages"] = stage_json(rep);
    s["kappa_final"] = rep.kappa_final;
    s["stabilization_rel"] = rep.stabilization_rel;
    s["energy"] = rep.energy.back();
    int total = 0;
    for (int it : rep.iterations) total += it;
    s["newton_iters"] = total;
  }

  {
    std::ofstream os = art.open_csv("solution.csv", "x,y,u1,u2");
    for (int i = 0; i < mesh.n_nodes(); ++i) {
      const Vec2 v = u.at_node(i);
      os << d(mesh.nodes[i].x) << ',' << d(mesh.nodes[i].y) << ',' << d(v.x) << ',' << d(v.y)
         << "\n";
    }
  }
  write_mesh_artifact(art, mesh);
  s["n_nodes"] = mesh.n_nodes();
  s["n_elements"] = mesh.n_elements();
  return art.finish(std::move(s));
}

RunResult run_converge(const ExperimentConfig& cfg, Artifacts& art) {
  const AnalyticVectorField exact = scale_field(named_solution(cfg.load.name), cfg.load.amplitude);
  const VectorField f = manufactured_rhs(StressModel::canonical(cfg.law), exact);
  const StressModel base = StressModel::canonical(cfg.law);

  struct Row {
    int level;
    double h, l2, h1, fe;
    int iters;
  };
  std::vector<Row> rows;
  // Warm starts: the previous-level solution is prolongated through each
  // refinement. The refine chain is kept alive because fields reference
  // their mesh.
  std::vector<std::unique_ptr<Mesh>> chain;
  chain.push_back(std::make_unique<Mesh>(build_mesh(cfg.domain, cfg.levels.front())));
  DiscreteField u(*chain.back());
  for (std::size_t li = 0; li < cfg.levels.size(); ++li) {
    if (li > 0)
      for (int l = cfg.levels[li - 1]; l < cfg.levels[li]; ++l) {
        chain.push_back(std::make_unique<Mesh>(refine(*chain.back())));
        u = prolongate(u, *chain.back());
      }
    const Mesh& mesh = *chain.back();
    const std::vector<double> b = load_vector(mesh, f);
    ContinuationReport rep;
    u = continuation_solve(cfg.law, b, std::move(u), default_schedule(cfg.law), cfg.solver, &rep);
    Row r;
    r.level = cfg.levels[li];
    r.h = mesh.h_max;
    r.l2 = l2_error(u, exact);
    r.h1 = h1_semi_error(u, exact);
    r.fe = f_error(base, u, exact);
    r.iters = 0;
    for (int it : rep.iterations) r.iters += it;
    rows.push_back(r);
  }
  {
    std::ofstream os = art.open_csv("errors.csv", "level,h_max,l2,h1_semi,f_err,newton_iters");
    for (const Row& r : rows)
      os << r.level << ',' << d(r.h) << ',' << d(r.l2) << ',' << d(r.h1) << ',' << d(r.fe) << ','
         << r.iters << "\n";
  }
  write_mesh_artifact(art, *chain.back());

  json s;
  if (rows.size() >= 2) {
    const Row& a = rows[rows.size() - 2];
    const Row& b2 = rows.back();
    const double lg = std::log(a.h / b2.h);
    s["h1_rate"] = std::log(a.h1 / b2.h1) / lg;
    s["f_rate"] = std::log(a.fe / b2.fe) / lg;
    s["l2_rate"] = std::log(a.l2 / b2.l2) / lg;
  }
  s["finest_h"] = rows.back().h;
  return art.finish(std::move(s));
}

constexpr char kRegHeader[] =
    "level,h_max,n_elements,energy,f_norm,grad_f_norm,w2q,interior,tangential,normal,"
    "split_consistency,cover_min,load_dual,delta,kappa_final,newton_iters,stabilization_rel,"
    "outlier_fraction";

void write_reg_row(std::ofstream& os, const RegularityRow& r) {
  os << r.level << ',' << d(r.h_max) << ',' << r.n_elements << ',' << d(r.energy) << ','
     << d(r.f_norm) << ',' << d(r.grad_f_norm) << ',' << d(r.w2q) << ',' << d(r.interior) << ','
     << d(r.tangential) << ',' << d(r.normal) << ',' << d(r.split_consistency) << ','
     << d(r.cover_min) << ',' << d(r.load_dual) << ',' << d(r.delta) << ',' << d(r.kappa_final)
     << ',' << r.newton_iters << ',' << d(r.stabilization_rel) << ',' << d(r.outlier_fraction)
     << "\n";
}

RunResult run_regularity(const ExperimentConfig& cfg, Artifacts& art) {
  RegularityOptions opt;
  opt.levels = cfg.levels;
  opt.r_max = cfg.r_max;
  opt.newton = cfg.solver;
  const VectorField f = make_load(cfg);
  const RegularityStudy study = refinement_study(cfg.law, cfg.domain, f, opt);

  {
    std::ofstream os = art.open_csv("regularity.csv", kRegHeader);
    for (const RegularityRow& r : study.rows) write_reg_row(os, r);
  }
  {
    std::ofstream os = art.open_csv("sweep.csv", "load_scale,grad_f_norm");
    for (std::size_t i = 0; i < study.sweep_scales.size(); ++i)
      os << d(study.sweep_scales[i]) << ',' << d(study.sweep_grad_f[i]) << "\n";
  }
  {
    std::ofstream os = art.open_csv("delta.csv", kRegHeader);
    for (const RegularityRow& r : study.delta_rows) write_reg_row(os, r);
  }
  write_mesh_artifact(art, build_mesh(cfg.domain, cfg.levels.back()));

  json s;
  s["levels"] = cfg.levels.size();
  s["finest_grad_f_norm"] = study.rows.back().grad_f_norm;
  s["finest_w2q"] = study.rows.back().w2q;
  s["cover_min"] = study.rows.back().cover_min;
  s["outlier_fraction"] = study.rows.back().outlier_fraction;
  s["sweep_monotone"] = study.sweep_monotone;
  return art.finish(std::move(s));
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& cfg, const std::string& out_dir) {
  Artifacts art(cfg, out_dir);
  switch (cfg.kind) {
    case ExperimentConfig::Kind::Check: return run_check(cfg, art);
    case ExperimentConfig::Kind::Solve: return run_solve(cfg, art);
    case ExperimentConfig::Kind::Converge: return run_converge(cfg, art);
    case ExperimentConfig::Kind::Regularity: return run_regularity(cfg, art);
  }
  throw Error("unreachable experiment kind");
}

std::string error_report_json(const std::string& error_class, const std::string& message) {
  json j;
  j["error"] = error_class;
  j["message"] = message;
  return j.dump(2);
}

}  // namespace pstruct
