// SPDX-FileCopyrightText: Copyright (c) 2026 The pstruct Authors
// SPDX-License-Identifier: Apache-2.0
#ifndef PSTRUCT_FORMAT_HPP
#define PSTRUCT_FORMAT_HPP

#include <charconv>
#include <string>

namespace pstruct {

/// Shortest decimal form that round-trips to the same double. Used by every
/// text artifact so identical runs produce identical bytes.
inline std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace pstruct

#endif
