// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver: runs one experiment described by a JSON
// configuration and writes its artifacts into the output directory.
//
// Exit codes: 0 success, 2 configuration error, 3 precondition violation,
// 4 solver failure, 5 acceptance-check failure, 1 anything else.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pstruct/errors.hpp"
#include "pstruct/harness.hpp"
#include "pstruct/version.hpp"

namespace {

struct CliArgs {
  std::string config_path;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int level = -1;
  std::string experiment;
};

void add_common(CLI::App* sub, CliArgs& args) {
  sub->add_option("--config", args.config_path, "JSON experiment configuration")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--out", args.out_dir, "output directory (default: out)");
  sub->add_option("--seed", args.seed, "override the sampling seed")
      ->each([&args](const std::string&) { args.seed_set = true; });
  sub->add_option("--level", args.level, "override the refinement level(s)")
      ->check(CLI::Range(0, 10));
  sub->callback([sub, &args] { args.experiment = sub->get_name(); });
}

struct Failure {
  int code;
  const char* kind;
};

Failure classify(const std::exception& e) {
  using namespace pstruct;
  if (dynamic_cast<const ConfigError*>(&e)) return {2, "config"};
  if (dynamic_cast<const AcceptanceError*>(&e)) return {5, "acceptance"};
  if (dynamic_cast<const SolveError*>(&e)) return {4, "solver"};
  if (dynamic_cast<const NotSmoothBoundaryError*>(&e) || dynamic_cast<const DegenerateError*>(&e) ||
      dynamic_cast<const SupportViolationError*>(&e) ||
      dynamic_cast<const DimensionMismatchError*>(&e) ||
      dynamic_cast<const MeshIoError*>(&e) || dynamic_cast<const std::invalid_argument*>(&e))
    return {3, "precondition"};
  return {1, "internal"};
}

void write_error_report(const std::string& out_dir, const Failure& f, const std::string& what) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) return;
  std::ofstream os(std::filesystem::path(out_dir) / "error.json", std::ios::binary);
  if (os) os << pstruct::error_report_json(f.kind, what) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(p,delta)-structure experiments: constitutive checks, Dirichlet solves,\n"
               "convergence studies and boundary regularity diagnostics"};
  app.set_version_flag("--version", PSTRUCT_VERSION_STRING);
  app.require_subcommand(1);

  CliArgs args;
  add_common(app.add_subcommand("check", "sample constitutive equivalence windows"), args);
  add_common(app.add_subcommand("solve", "solve one Dirichlet problem"), args);
  add_common(app.add_subcommand("converge", "manufactured-solution convergence study"), args);
  add_common(app.add_subcommand("regularity", "refinement study of regularity diagnostics"), args);

  CLI11_PARSE(app, argc, argv);

  try {
    pstruct::ExperimentConfig cfg = pstruct::load_config_file(args.config_path);
    if (cfg.kind_name() != args.experiment)
      throw pstruct::ConfigError("config experiment \"" + cfg.kind_name() +
                                 "\" does not match subcommand \"" + args.experiment + "\"");
    if (args.seed_set) cfg.seed = args.seed;
    if (args.level >= 0) {
      cfg.level = args.level;
      cfg.levels = {args.level};
    }
    const pstruct::RunResult r = pstruct::run_experiment(cfg, args.out_dir);
    std::cout << r.manifest_path << "\n";
    return 0;
  } catch (const std::exception& e) {
    const Failure f = classify(e);
    write_error_report(args.out_dir, f, e.what());
    std::cerr << "error (" << f.kind << "): " << e.what() << "\n";
    return f.code;
  }
}
