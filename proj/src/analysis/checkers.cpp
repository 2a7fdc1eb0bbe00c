//===-- checkers.cpp - Checker ids and emulation profiles -----------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/checkers.hpp"

#include <array>
#include <utility>

namespace memlab {

namespace {

constexpr std::array<std::pair<CheckerId, std::string_view>, 9> CheckerTokens =
    {{
        {CheckerId::NullDeref, "NULL_DEREF"},
        {CheckerId::UncheckedAlloc, "UNCHECKED_ALLOC"},
        {CheckerId::MemoryLeak, "MEMORY_LEAK"},
        {CheckerId::ReallocLeak, "REALLOC_LEAK"},
        {CheckerId::InvalidFree, "INVALID_FREE"},
        {CheckerId::InteriorFree, "INTERIOR_FREE"},
        {CheckerId::DeadStore, "DEAD_STORE"},
        {CheckerId::DeadStoreNullInit, "DEAD_STORE_NULL_INIT"},
        {CheckerId::UninitUse, "UNINIT_USE"},
    }};

} // namespace

std::string_view to_token(CheckerId id) {
  for (const auto &[c, token] : CheckerTokens)
    if (c == id)
      return token;
  return "?";
}

std::optional<CheckerId> checker_from_token(std::string_view token) {
  for (const auto &[c, t] : CheckerTokens)
    if (t == token)
      return c;
  return std::nullopt;
}

const std::vector<CheckerId> &all_checkers() {
  static const std::vector<CheckerId> ids = [] {
    std::vector<CheckerId> out;
    for (const auto &entry : CheckerTokens)
      out.push_back(entry.first);
    return out;
  }();
  return ids;
}

Kind kind_of(CheckerId id) {
  switch (id) {
  case CheckerId::NullDeref:
  case CheckerId::UncheckedAlloc:
    return Kind::NullDereference;
  case CheckerId::MemoryLeak:
  case CheckerId::ReallocLeak:
    return Kind::MemoryLeak;
  case CheckerId::InvalidFree:
  case CheckerId::InteriorFree:
    return Kind::InvalidFree;
  case CheckerId::DeadStore:
  case CheckerId::DeadStoreNullInit:
    return Kind::DeadStore;
  case CheckerId::UninitUse:
    return Kind::UninitializedValue;
  }
  return Kind::Unmapped;
}

UnknownProfile::UnknownProfile(const std::string &name)
    : Error("unknown profile '" + name + "'") {}

UnknownChecker::UnknownChecker(const std::string &name)
    : Error("unknown checker '" + name + "'") {}

void CheckerConfig::enable(CheckerId id) {
  enabled.insert(id);
  if (id == CheckerId::DeadStoreNullInit)
    enabled.insert(CheckerId::DeadStore);
}

void CheckerConfig::disable(CheckerId id) {
  enabled.erase(id);
  if (id == CheckerId::DeadStore)
    enabled.erase(CheckerId::DeadStoreNullInit);
}

const std::vector<std::string> &profile_names() {
  static const std::vector<std::string> names = {
      "union", "infer-like", "cppcheck-like", "clang-like", "predator-like"};
  return names;
}

CheckerConfig make_profile(std::string_view name) {
  using C = CheckerId;
  CheckerConfig config;
  config.profile = std::string(name);
  auto enable_all = [&](std::initializer_list<CheckerId> ids) {
    for (CheckerId id : ids)
      config.enable(id);
  };
  if (name == "union") {
    for (CheckerId id : all_checkers())
      config.enable(id);
  } else if (name == "infer-like") {
    enable_all({C::NullDeref, C::UncheckedAlloc, C::MemoryLeak, C::ReallocLeak,
                C::InvalidFree, C::DeadStore, C::DeadStoreNullInit});
  } else if (name == "cppcheck-like") {
    enable_all({C::NullDeref, C::MemoryLeak, C::ReallocLeak, C::InvalidFree,
                C::UninitUse});
    config.interprocedural = false;
    config.struct_field_tracking = false;
  } else if (name == "clang-like") {
    enable_all({C::NullDeref, C::MemoryLeak, C::InvalidFree, C::InteriorFree,
                C::DeadStore, C::UninitUse});
  } else if (name == "predator-like") {
    enable_all({C::NullDeref, C::MemoryLeak, C::InvalidFree, C::InteriorFree});
  } else {
    throw UnknownProfile(std::string(name));
  }
  return config;
}

void apply_table_emulation(CheckerConfig &config) {
  if (config.profile == "infer-like")
    config.sizeof_deref_tracking = false;
}

} // namespace memlab
