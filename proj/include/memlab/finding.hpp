//===-- memlab/finding.hpp - Normalized diagnostics ------------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_FINDING_HPP
#define MEMLAB_FINDING_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace memlab {

/// Normalized error kinds. The tokens match the Infer-style spelling.
enum class Kind {
  NullDereference,
  MemoryLeak,
  InvalidFree,
  InvalidDereference,
  DeadStore,
  UninitializedValue,
  ResourceLeak,
  BufferOverflow,
  DanglingPointer,
  Unmapped, // counted, never classified
};

std::string_view to_token(Kind kind);
std::optional<Kind> kind_from_token(std::string_view token);
const std::vector<Kind> &all_kinds();

struct Finding {
  std::string file;
  int line = 0;
  Kind kind = Kind::Unmapped;
  std::string checker;
  std::string message;
  std::string function;
  std::optional<int> column; // kept from external reports, never matched

  bool operator==(const Finding &) const = default;
};

/// Sort order: file, line, kind token, checker, message, function.
bool finding_less(const Finding &a, const Finding &b);

/// Sorts and removes exact duplicates.
void normalize_findings(std::vector<Finding> &findings);

} // namespace memlab

#endif // MEMLAB_FINDING_HPP
