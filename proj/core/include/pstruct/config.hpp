// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_CONFIG_HPP
#define PSTRUCT_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pstruct/mesh.hpp"
#include "pstruct/newton.hpp"
#include "pstruct/nfunction.hpp"

namespace pstruct {

/// Load selection: a named source field, or the manufactured load of a
/// named exact solution (amplitude scales either).
struct LoadSpec {
  enum class Kind { Named, Manufactured };
  Kind kind = Kind::Named;
  std::string name = "const-x";
  double amplitude = 1.0;
};

/// Parsed experiment configuration. The JSON schema is strict: unknown keys
/// anywhere are rejected, as are out-of-range values.
struct ExperimentConfig {
  enum class Kind { Check, Solve, Converge, Regularity };

  Kind kind = Kind::Solve;
  PDeltaParams law;
  DomainSpec domain;
  LoadSpec load;
  NewtonOptions solver;
  std::vector<int> levels{2, 3, 4};
  int level = 3;
  long samples = 20000;
  std::uint64_t seed = 42;
  double r_max = 0.5;
  // Optional single-stage law override for solve runs; both zero means the
  // default continuation schedule.
  double eps = 0.0;
  double kappa = 0.0;

  std::string kind_name() const;
};

/// Parses and validates a configuration from JSON text. Throws ConfigError
/// with the JSON path of the offending key or value.
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config_file(const std::string& path);

/// Canonical JSON echo of the effective configuration (defaults filled in,
/// keys sorted); identical configurations echo to identical bytes.
std::string config_echo(const ExperimentConfig& cfg);

/// FNV-1a hash of a string and the 16-hex-digit configuration fingerprint
/// (hash of the canonical echo) stamped into every report.
std::uint64_t fnv1a(const std::string& s);
std::string config_hash(const ExperimentConfig& cfg);

}  // namespace pstruct

#endif
