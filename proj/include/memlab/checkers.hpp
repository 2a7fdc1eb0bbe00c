//===-- memlab/checkers.hpp - Checker ids and profiles ---------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_CHECKERS_HPP
#define MEMLAB_CHECKERS_HPP

#include "memlab/error.hpp"
#include "memlab/finding.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace memlab {

enum class CheckerId {
  NullDeref,
  UncheckedAlloc,
  MemoryLeak,
  ReallocLeak,
  InvalidFree,
  InteriorFree,
  DeadStore,
  DeadStoreNullInit,
  UninitUse,
};

std::string_view to_token(CheckerId id);
std::optional<CheckerId> checker_from_token(std::string_view token);
const std::vector<CheckerId> &all_checkers();

/// The finding kind a checker reports.
Kind kind_of(CheckerId id);

class UnknownProfile : public Error {
public:
  explicit UnknownProfile(const std::string &name);
};

class UnknownChecker : public Error {
public:
  explicit UnknownChecker(const std::string &name);
};

struct CheckerConfig {
  std::string profile = "union";
  std::set<CheckerId> enabled;

  // Modeling switches used to emulate individual tools.
  bool interprocedural = true;        // apply callee summaries
  bool struct_field_tracking = true;  // blocks owned by a freed struct leak
  bool sizeof_deref_tracking = true;  // keep malloc(sizeof(*p)) allocations

  bool is_enabled(CheckerId id) const { return enabled.count(id) != 0; }

  /// Keeps DEAD_STORE_NULL_INIT => DEAD_STORE.
  void enable(CheckerId id);
  void disable(CheckerId id);

  bool operator==(const CheckerConfig &) const = default;
};

const std::vector<std::string> &profile_names();

/// Throws UnknownProfile.
CheckerConfig make_profile(std::string_view name);

/// Reproduces the tool matrix as printed, where the Infer column still
/// carries the malloc(sizeof(*p)) limitation. Only affects `infer-like`.
void apply_table_emulation(CheckerConfig &config);

} // namespace memlab

#endif // MEMLAB_CHECKERS_HPP
