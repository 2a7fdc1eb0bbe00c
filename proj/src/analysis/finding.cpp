//===-- finding.cpp - Normalized diagnostics ------------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/finding.hpp"

#include <algorithm>
#include <array>
#include <tuple>
#include <utility>

namespace memlab {

namespace {

constexpr std::array<std::pair<Kind, std::string_view>, 10> KindTokens = {{
    {Kind::NullDereference, "NULL_DEREFERENCE"},
    {Kind::MemoryLeak, "MEMORY_LEAK"},
    {Kind::InvalidFree, "INVALID_FREE"},
    {Kind::InvalidDereference, "INVALID_DEREFERENCE"},
    {Kind::DeadStore, "DEAD_STORE"},
    {Kind::UninitializedValue, "UNINITIALIZED_VALUE"},
    {Kind::ResourceLeak, "RESOURCE_LEAK"},
    {Kind::BufferOverflow, "BUFFER_OVERFLOW"},
    {Kind::DanglingPointer, "DANGLING_POINTER"},
    {Kind::Unmapped, "UNMAPPED"},
}};

} // namespace

std::string_view to_token(Kind kind) {
  for (const auto &[k, token] : KindTokens)
    if (k == kind)
      return token;
  return "UNMAPPED";
}

std::optional<Kind> kind_from_token(std::string_view token) {
  for (const auto &[k, t] : KindTokens)
    if (t == token)
      return k;
  return std::nullopt;
}

const std::vector<Kind> &all_kinds() {
  static const std::vector<Kind> kinds = [] {
    std::vector<Kind> out;
    for (const auto &entry : KindTokens)
      out.push_back(entry.first);
    return out;
  }();
  return kinds;
}

bool finding_less(const Finding &a, const Finding &b) {
  return std::forward_as_tuple(a.file, a.line, to_token(a.kind), a.checker,
                               a.message, a.function, a.column) <
         std::forward_as_tuple(b.file, b.line, to_token(b.kind), b.checker,
                               b.message, b.function, b.column);
}

void normalize_findings(std::vector<Finding> &findings) {
  std::sort(findings.begin(), findings.end(), finding_less);
  findings.erase(std::unique(findings.begin(), findings.end()),
                 findings.end());
}

} // namespace memlab
