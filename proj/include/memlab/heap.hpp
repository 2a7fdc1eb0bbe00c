//===-- memlab/heap.hpp - Symbolic heap domain -----------------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_HEAP_HPP
#define MEMLAB_HEAP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace memlab {

using SiteId = int;

struct NullValue {
  bool operator==(const NullValue &) const = default;
};
/// Pointer into an allocation. A missing offset means "somewhere inside".
struct BlockRef {
  SiteId site = 0;
  std::optional<std::int64_t> offset = 0;
  bool may_be_null = false;
  bool operator==(const BlockRef &) const = default;
};
struct StackAddr {
  std::string var;
  bool operator==(const StackAddr &) const = default;
};
struct UnknownValue {
  bool operator==(const UnknownValue &) const = default;
};
struct FreedRef {
  SiteId site = 0;
  bool operator==(const FreedRef &) const = default;
};
struct UninitValue {
  bool operator==(const UninitValue &) const = default;
};
/// A scalar known to be non-zero.
struct NonZero {
  bool operator==(const NonZero &) const = default;
};

using PtrValue = std::variant<NullValue, BlockRef, StackAddr, UnknownValue,
                              FreedRef, UninitValue, NonZero>;

std::string describe(const PtrValue &value);

enum class SiteState { Live, Freed, ReallocPending };
enum class SiteOrigin { Malloc, Calloc, Realloc, CallResult, Param };

struct HeapBlock {
  SiteState state = SiteState::Live;
  SiteOrigin origin = SiteOrigin::Malloc;
  int line = 0;
  int column = 0;
  std::string allocator; // "malloc", "calloc", or the callee name
  std::map<std::string, PtrValue> fields; // "*" holds the pointee itself
  bool zeroed = false;
  bool escaped = false; // owned by something outside the tracked state
  bool null_reported = false;
  bool realloc_leak_reported = false;
  int param_index = -1;
  std::optional<SiteId> realloc_into; // set while ReallocPending
  std::optional<SiteId> realloc_from; // set on an unchecked realloc result

  bool operator==(const HeapBlock &) const = default;
};

struct AbstractHeap {
  std::map<std::string, PtrValue> env;
  std::map<SiteId, HeapBlock> blocks;
  std::map<std::string, int> pending_stores; // variable -> store record id

  HeapBlock *block(SiteId site);
  const HeapBlock *block(SiteId site) const;

  /// Replaces every reference to `site` in variables and fields.
  void rewrite(SiteId site, const PtrValue &replacement);
  /// Marks the site freed and turns its references into FreedRef.
  void release(SiteId site);
  /// Removes a site on the branch where it is null.
  void drop(SiteId site);
  void clear_may_be_null(SiteId site);
  /// Marks the block behind `value` and everything it reaches as escaped.
  void escape(const PtrValue &value);

  std::set<SiteId> reachable_from(const std::vector<PtrValue> &roots) const;
  std::vector<PtrValue> env_roots() const;

  /// First access path (`p`, `p->f`) naming each reachable site.
  std::map<SiteId, std::string> describe_references() const;

  bool invariants_hold() const;

  bool operator==(const AbstractHeap &) const = default;
};

PtrValue join_values(const PtrValue &a, const PtrValue &b);
AbstractHeap join(const AbstractHeap &a, const AbstractHeap &b);

} // namespace memlab

#endif // MEMLAB_HEAP_HPP
