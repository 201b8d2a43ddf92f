// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#include "pstruct/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pstruct/errors.hpp"
#include "pstruct/fields.hpp"

namespace pstruct {
namespace {

using nlohmann::json;

/// Strict view of one JSON object: typed getters mark keys as consumed,
/// finish() rejects anything left over.
class StrictObject {
 public:
  StrictObject(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(path_ + ": object expected");
  }

  bool has(const char* key) const { return j_.contains(key); }

  double number(const char* key) {
    const json& v = get(key);
    if (!v.is_number()) throw ConfigError(at(key) + ": number expected");
    return v.get<double>();
  }
  double number_or(const char* key, double fallback) {
    return has(key) ? number(key) : fallback;
  }
  long integer(const char* key) {
    const json& v = get(key);
    if (!v.is_number_integer()) throw ConfigError(at(key) + ": integer expected");
    return v.get<long>();
  }
  long integer_or(const char* key, long fallback) {
    return has(key) ? integer(key) : fallback;
  }
  std::uint64_t unsigned_or(const char* key, std::uint64_t fallback) {
    if (!has(key)) return fallback;
    const json& v = get(key);
    if (!v.is_number_integer() || (v.is_number_integer() && v.get<long long>() < 0))
      throw ConfigError(at(key) + ": nonnegative integer expected");
    return v.get<std::uint64_t>();
  }
  std::string text(const char* key) {
    const json& v = get(key);
    if (!v.is_string()) throw ConfigError(at(key) + ": string expected");
    return v.get<std::string>();
  }
  std::string text_or(const char* key, const std::string& fallback) {
    return has(key) ? text(key) : fallback;
  }
  std::vector<int> int_array(const char* key) {
    const json& v = get(key);
    if (!v.is_array() || v.empty()) throw ConfigError(at(key) + ": nonempty array expected");
    std::vector<int> out;
    for (const auto& e : v) {
      if (!e.is_number_integer()) throw ConfigError(at(key) + ": integer entries expected");
      out.push_back(e.get<int>());
    }
    return out;
  }
  const json* object(const char* key) {
    if (!has(key)) return nullptr;
    return &get(key);
  }

  std::string at(const char* key) const { return path_ + "." + key; }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
      if (!used_.count(it.key()))
        throw ConfigError(path_ + ": unknown key \"" + it.key() + "\"");
  }

 private:
  const json& get(const char* key) {
    used_.insert(key);
    auto it = j_.find(key);
    if (it == j_.end()) throw ConfigError(at(key) + ": missing");
    return *it;
  }

  const json& j_;
  std::string path_;
  std::set<std::string> used_;
};

PDeltaParams parse_law(const json& j) {
  StrictObject o(j, "law");
  PDeltaParams prm;
  prm.p = o.number("p");
  prm.delta = o.number_or("delta", 0.0);
  prm.mu = o.number_or("mu", 1.0);
  prm.delta0 = o.number_or("delta0", 2.0);
  o.finish();
  if (!(prm.p > 1.0 && prm.p <= 2.0)) throw ConfigError("law.p out of (1, 2]");
  if (!(prm.delta >= 0.0)) throw ConfigError("law.delta must be nonnegative");
  if (!(prm.mu > 0.0)) throw ConfigError("law.mu must be positive");
  if (!(prm.delta0 > 0.0)) throw ConfigError("law.delta0 must be positive");
  return prm;
}

DomainSpec parse_domain(const json& j) {
  StrictObject o(j, "domain");
  const std::string type = o.text("type");
  DomainSpec d;
  if (type == "unit-square") {
    d = DomainSpec::unit_square();
  } else if (type == "unit-disk") {
    d = DomainSpec::unit_disk();
  } else if (type == "annulus") {
    const double r_in = o.number("r_in");
    const double r_out = o.number("r_out");
    if (!(r_in > 0.0 && r_in < r_out)) throw ConfigError("domain: need 0 < r_in < r_out");
    d = DomainSpec::annulus(r_in, r_out);
  } else if (type == "mesh-file") {
    const std::string path = o.text("path");
    if (path.empty()) throw ConfigError("domain.path: empty");
    d = DomainSpec::mesh_file(path);
  } else {
    throw ConfigError("domain.type: unknown type \"" + type + "\"");
  }
  o.finish();
  return d;
}

LoadSpec parse_load(const json& j) {
  StrictObject o(j, "load");
  LoadSpec l;
  const std::string kind = o.text_or("kind", "named");
  if (kind == "named") {
    l.kind = LoadSpec::Kind::Named;
    l.name = o.text("name");
    named_source(l.name);  // validates the name
  } else if (kind == "manufactured") {
    l.kind = LoadSpec::Kind::Manufactured;
    l.name = o.text("solution");
    named_solution(l.name);
  } else {
    throw ConfigError("load.kind: unknown kind \"" + kind + "\"");
  }
  l.amplitude = o.number_or("amplitude", 1.0);
  if (!(l.amplitude > 0.0)) throw ConfigError("load.amplitude must be positive");
  o.finish();
  return l;
}

NewtonOptions parse_solver(const json& j) {
  StrictObject o(j, "solver");
  NewtonOptions n;
  n.tol = o.number_or("tol", 1e-10);
  n.max_iter = static_cast<int>(o.integer_or("max_iter", 60));
  o.finish();
  if (!(n.tol > 0.0 && n.tol < 1.0)) throw ConfigError("solver.tol out of (0, 1)");
  if (n.max_iter < 1) throw ConfigError("solver.max_iter must be at least 1");
  return n;
}

ExperimentConfig parse_config(const json& j) {
  StrictObject o(j, "config");
  ExperimentConfig cfg;
  const std::string kind = o.text("experiment");
  if (kind == "check")
    cfg.kind = ExperimentConfig::Kind::Check;
  else if (kind == "solve")
    cfg.kind = ExperimentConfig::Kind::Solve;
  else if (kind == "converge")
    cfg.kind = ExperimentConfig::Kind::Converge;
  else if (kind == "regularity")
    cfg.kind = ExperimentConfig::Kind::Regularity;
  else
    throw ConfigError("config.experiment: unknown experiment \"" + kind + "\"");

  cfg.law = parse_law(*[&] {
    const json* p = o.object("law");
    if (!p) throw ConfigError("config.law: missing");
    return p;
  }());
  if (const json* p = o.object("domain")) cfg.domain = parse_domain(*p);
  else if (cfg.kind != ExperimentConfig::Kind::Check)
    throw ConfigError("config.domain: missing");
  if (const json* p = o.object("load")) cfg.load = parse_load(*p);
  if (const json* p = o.object("solver")) cfg.solver = parse_solver(*p);
  if (o.has("levels")) cfg.levels = o.int_array("levels");
  cfg.level = static_cast<int>(o.integer_or("level", 3));
  cfg.samples = o.integer_or("samples", 20000);
  cfg.seed = o.unsigned_or("seed", 42);
  if (const json* p = o.object("charts")) {
    StrictObject c(*p, "charts");
    cfg.r_max = c.number_or("r_max", 0.5);
    c.finish();
  }
  cfg.eps = o.number_or("eps", 0.0);
  cfg.kappa = o.number_or("kappa", 0.0);
  o.finish();

  for (int l : cfg.levels)
    if (l < 0 || l > 10) throw ConfigError("config.levels: level out of [0, 10]");
  for (std::size_t i = 1; i < cfg.levels.size(); ++i)
    if (cfg.levels[i] <= cfg.levels[i - 1])
      throw ConfigError("config.levels: must be strictly increasing");
  if (cfg.level < 0 || cfg.level > 10) throw ConfigError("config.level out of [0, 10]");
  if (cfg.samples < 100) throw ConfigError("config.samples: at least 100 required");
  if (!(cfg.r_max > 0.0 && cfg.r_max < 1.0)) throw ConfigError("charts.r_max out of (0, 1)");
  if (cfg.eps < 0.0) throw ConfigError("config.eps must be nonnegative");
  if (cfg.kappa < 0.0 || cfg.kappa >= 1.0) throw ConfigError("config.kappa out of [0, 1)");
  if (cfg.kind == ExperimentConfig::Kind::Converge && cfg.load.kind != LoadSpec::Kind::Manufactured)
    throw ConfigError("config.load: convergence study needs a manufactured solution");
  return cfg;
}

}  // namespace

std::string ExperimentConfig::kind_name() const {
  switch (kind) {
    case Kind::Check: return "check";
    case Kind::Solve: return "solve";
    case Kind::Converge: return "converge";
    case Kind::Regularity: return "regularity";
  }
  return "unknown";
}

ExperimentConfig parse_config_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  return parse_config(j);
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string config_echo(const ExperimentConfig& cfg) {
  json j;
  j["experiment"] = cfg.kind_name();
  j["law"] = {{"p", cfg.law.p}, {"delta", cfg.law.delta}, {"mu", cfg.law.mu},
              {"delta0", cfg.law.delta0}};
  switch (cfg.domain.kind) {
    case DomainSpec::Kind::UnitSquare: j["domain"] = {{"type", "unit-square"}}; break;
    case DomainSpec::Kind::UnitDisk: j["domain"] = {{"type", "unit-disk"}}; break;
    case DomainSpec::Kind::Annulus:
      j["domain"] = {{"type", "annulus"}, {"r_in", cfg.domain.r_in}, {"r_out", cfg.domain.r_out}};
      break;
    case DomainSpec::Kind::MeshFile:
      j["domain"] = {{"type", "mesh-file"}, {"path", cfg.domain.path}};
      break;
  }
  if (cfg.load.kind == LoadSpec::Kind::Named)
    j["load"] = {{"kind", "named"}, {"name", cfg.load.name}, {"amplitude", cfg.load.amplitude}};
  else
    j["load"] = {{"kind", "manufactured"},
                 {"solution", cfg.load.name},
                 {"amplitude", cfg.load.amplitude}};
  j["solver"] = {{"tol", cfg.solver.tol}, {"max_iter", cfg.solver.max_iter}};
  j["levels"] = cfg.levels;
  j["level"] = cfg.level;
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["charts"] = {{"r_max", cfg.r_max}};
  j["eps"] = cfg.eps;
  j["kappa"] = cfg.kappa;
  return j.dump(2);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string config_hash(const ExperimentConfig& cfg) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(config_echo(cfg))));
  return buf;
}

}  // namespace pstruct
