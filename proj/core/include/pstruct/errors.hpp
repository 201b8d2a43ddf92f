// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_ERRORS_HPP
#define PSTRUCT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pstruct {

/// Root of the library's error hierarchy.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operands of incompatible tensor dimension.
class DimensionMismatchError : public Error {
 public:
  explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

/// Evaluation at a point where the p-structure law (p < 2) is singular:
/// second derivatives at the origin with vanishing shift.
class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& what) : Error(what) {}
};

/// Boundary charts requested for a domain without a C^2 boundary.
class NotSmoothBoundaryError : public Error {
 public:
  explicit NotSmoothBoundaryError(const std::string& what) : Error(what) {}
};

/// Chart-local evaluation outside the region where the boundary graph
/// (or a translated sample) is defined.
class SupportViolationError : public Error {
 public:
  explicit SupportViolationError(const std::string& what) : Error(what) {}
};

/// Base for nonlinear-solve failures.
class SolveError : public Error {
 public:
  explicit SolveError(const std::string& what) : Error(what) {}
};

class MaxIterExceededError : public SolveError {
 public:
  explicit MaxIterExceededError(const std::string& what) : SolveError(what) {}
};

class LineSearchStalledError : public SolveError {
 public:
  explicit LineSearchStalledError(const std::string& what) : SolveError(what) {}
};

class DefinitenessLostError : public SolveError {
 public:
  explicit DefinitenessLostError(const std::string& what) : SolveError(what) {}
};

/// Invalid or malformed experiment configuration.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Malformed mesh file or unreadable path.
class MeshIoError : public Error {
 public:
  explicit MeshIoError(const std::string& what) : Error(what) {}
};

/// A randomized check suite found a violated bound.
class AcceptanceError : public Error {
 public:
  explicit AcceptanceError(const std::string& what) : Error(what) {}
};

}  // namespace pstruct

#endif
