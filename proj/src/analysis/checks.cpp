//===-- checks.cpp - Individual checkers ----------------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/analysis.hpp"

namespace memlab {

namespace {

bool enabled(const CheckContext &ctx, CheckerId id) {
  return ctx.config && ctx.config->is_enabled(id);
}

Finding make(const CheckContext &ctx, int line, CheckerId id,
             std::string message) {
  Finding f;
  f.file = ctx.file;
  f.line = line;
  f.kind = kind_of(id);
  f.checker = std::string(to_token(id));
  f.message = std::move(message);
  f.function = ctx.function;
  return f;
}

std::string at_text(SourceLoc at) {
  return "line " + std::to_string(at.line) + ", column " +
         std::to_string(at.column);
}

} // namespace

std::optional<Finding> check_null_deref(const AbstractHeap &state,
                                        const PtrValue &pointer,
                                        std::string_view text, SourceLoc at,
                                        const CheckContext &ctx) {
  if (std::holds_alternative<NullValue>(pointer)) {
    if (!enabled(ctx, CheckerId::NullDeref))
      return std::nullopt;
    return make(ctx, at.line, CheckerId::NullDeref,
                "pointer `" + std::string(text) +
                    "` is null and is dereferenced at " + at_text(at) + ".");
  }
  const auto *ref = std::get_if<BlockRef>(&pointer);
  if (!ref || !ref->may_be_null || !enabled(ctx, CheckerId::UncheckedAlloc))
    return std::nullopt;
  const HeapBlock *blk = state.block(ref->site);
  if (!blk || blk->null_reported)
    return std::nullopt;
  return make(ctx, at.line, CheckerId::UncheckedAlloc,
              "pointer `" + std::string(text) + "` last assigned on line " +
                  std::to_string(blk->line) +
                  " could be null and is dereferenced at " + at_text(at) +
                  ".");
}

std::optional<Finding> check_invalid_free(const AbstractHeap &state,
                                          const PtrValue &argument,
                                          std::string_view text, SourceLoc at,
                                          const CheckContext &ctx) {
  const std::string name(text);
  if (const auto *freed = std::get_if<FreedRef>(&argument)) {
    if (!enabled(ctx, CheckerId::InvalidFree))
      return std::nullopt;
    std::string origin;
    if (const HeapBlock *blk = state.block(freed->site))
      origin = " allocated at line " + std::to_string(blk->line);
    return make(ctx, at.line, CheckerId::InvalidFree,
                "memory" + origin + " pointed to by `" + name +
                    "` is freed twice.");
  }
  if (const auto *stack = std::get_if<StackAddr>(&argument)) {
    if (!enabled(ctx, CheckerId::InvalidFree))
      return std::nullopt;
    return make(ctx, at.line, CheckerId::InvalidFree,
                "`" + name + "` points to the stack variable `" + stack->var +
                    "` and is passed to `free()`.");
  }
  if (const auto *ref = std::get_if<BlockRef>(&argument)) {
    if (!ref->offset || *ref->offset == 0 ||
        !enabled(ctx, CheckerId::InteriorFree))
      return std::nullopt;
    std::string origin;
    if (const HeapBlock *blk = state.block(ref->site))
      origin = " allocated at line " + std::to_string(blk->line);
    return make(ctx, at.line, CheckerId::InteriorFree,
                "`" + name + "` points " + std::to_string(*ref->offset) +
                    " bytes into the block" + origin +
                    " and is passed to `free()`.");
  }
  return std::nullopt;
}

LeakCheck check_memory_leak(const AbstractHeap &state,
                            const std::vector<PtrValue> &roots, int at,
                            const AbstractHeap &before,
                            const CheckContext &ctx) {
  LeakCheck out;
  const std::set<SiteId> reach = state.reachable_from(roots);
  std::map<SiteId, std::string> names;
  bool named = false;
  for (const auto &[site, blk] : state.blocks) {
    if (blk.origin == SiteOrigin::Param || blk.escaped || reach.count(site))
      continue;
    if (!named) {
      names = before.describe_references();
      named = true;
    }
    auto name_of = [&](SiteId s) {
      auto it = names.find(s);
      return it == names.end() ? std::string() : it->second;
    };

    if (blk.state == SiteState::Live) {
      out.leaked.push_back(site);
      if (!enabled(ctx, CheckerId::MemoryLeak))
        continue;
      std::string name = name_of(site);
      std::string msg = "memory dynamically allocated";
      if (!name.empty())
        msg += " to `" + name + "`";
      msg += " by call to `" + blk.allocator + "()` at line " +
             std::to_string(blk.line) + " is not reachable after line " +
             std::to_string(at) + ".";
      out.findings.push_back(make(ctx, at, CheckerId::MemoryLeak, msg));
    } else if (blk.state == SiteState::ReallocPending &&
               !blk.realloc_leak_reported && blk.realloc_into) {
      const HeapBlock *next = state.block(*blk.realloc_into);
      if (!next || next->realloc_from != site)
        continue;
      out.realloc_orphans.push_back(site);
      if (!enabled(ctx, CheckerId::ReallocLeak))
        continue;
      std::string name = name_of(site);
      std::string msg = "memory dynamically allocated";
      if (!name.empty())
        msg += " to `" + name + "`";
      msg += " by call to `" + blk.allocator + "()` at line " +
             std::to_string(blk.line) + " is not reachable after line " +
             std::to_string(at) + " if `" + next->allocator +
             "()` fails (common realloc mistake";
      if (!name.empty())
        msg += ": `" + name + "` nulled but not freed upon failure";
      msg += ").";
      out.findings.push_back(make(ctx, at, CheckerId::ReallocLeak, msg));
    }
  }
  return out;
}

std::vector<Finding> check_dead_store(const std::vector<StoreRecord> &stores,
                                      const CheckContext &ctx) {
  std::vector<Finding> out;
  for (const auto &s : stores) {
    if (s.used)
      continue;
    CheckerId id =
        s.null_or_zero ? CheckerId::DeadStoreNullInit : CheckerId::DeadStore;
    if (!enabled(ctx, id))
      continue;
    out.push_back(make(ctx, s.loc.line, id,
                       "The value written to &" + s.var + " is never used."));
  }
  return out;
}

std::optional<Finding> check_uninit_use(const AbstractHeap &state,
                                        std::string_view var, SourceLoc at,
                                        const CheckContext &ctx) {
  auto it = state.env.find(std::string(var));
  if (it == state.env.end() ||
      !std::holds_alternative<UninitValue>(it->second) ||
      !enabled(ctx, CheckerId::UninitUse))
    return std::nullopt;
  return make(ctx, at.line, CheckerId::UninitUse,
              "The value read from `" + std::string(var) + "` at " +
                  at_text(at) + " was never initialized.");
}

} // namespace memlab
