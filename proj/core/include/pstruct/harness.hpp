// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_HARNESS_HPP
#define PSTRUCT_HARNESS_HPP

#include <string>
#include <vector>

#include "pstruct/config.hpp"

namespace pstruct {

struct RunResult {
  std::string manifest_path;
  std::vector<std::string> artifacts;  // file names inside the output directory
};

/// Runs one experiment and writes its artifacts into out_dir (created if
/// absent): always manifest.json; mesh.txt plus per-kind CSV tables for the
/// mesh-based experiments. CSV content is a pure function of the
/// configuration (identical runs produce identical bytes); every CSV starts
/// with a "# config <fingerprint>" comment row.
///
/// Errors escape as exceptions; no partial manifest is written in that case.
RunResult run_experiment(const ExperimentConfig& cfg, const std::string& out_dir);

/// Serialized error report {"error": <class>, "message": <what>} used by
/// the command-line driver.
std::string error_report_json(const std::string& error_class, const std::string& message);

}  // namespace pstruct

#endif
