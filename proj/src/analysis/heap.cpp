//===-- heap.cpp - Symbolic heap domain -----------------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/heap.hpp"

#include <deque>

namespace memlab {

namespace {

template <typename Fn> void for_each_value(AbstractHeap &heap, Fn &&fn) {
  for (auto &[name, value] : heap.env)
    fn(value);
  for (auto &[site, block] : heap.blocks)
    for (auto &[field, value] : block.fields)
      fn(value);
}

template <typename Fn>
void for_each_value(const AbstractHeap &heap, Fn &&fn) {
  for (const auto &[name, value] : heap.env)
    fn(value);
  for (const auto &[site, block] : heap.blocks)
    for (const auto &[field, value] : block.fields)
      fn(value);
}

} // namespace

std::string describe(const PtrValue &value) {
  struct Visitor {
    std::string operator()(const NullValue &) const { return "null"; }
    std::string operator()(const BlockRef &b) const {
      std::string out = "block#" + std::to_string(b.site);
      if (!b.offset)
        out += "+?";
      else if (*b.offset != 0)
        out += "+" + std::to_string(*b.offset);
      if (b.may_be_null)
        out += "?";
      return out;
    }
    std::string operator()(const StackAddr &s) const { return "&" + s.var; }
    std::string operator()(const UnknownValue &) const { return "unknown"; }
    std::string operator()(const FreedRef &f) const {
      return "freed#" + std::to_string(f.site);
    }
    std::string operator()(const UninitValue &) const { return "uninit"; }
    std::string operator()(const NonZero &) const { return "nonzero"; }
  };
  return std::visit(Visitor{}, value);
}

HeapBlock *AbstractHeap::block(SiteId site) {
  auto it = blocks.find(site);
  return it == blocks.end() ? nullptr : &it->second;
}

const HeapBlock *AbstractHeap::block(SiteId site) const {
  auto it = blocks.find(site);
  return it == blocks.end() ? nullptr : &it->second;
}

void AbstractHeap::rewrite(SiteId site, const PtrValue &replacement) {
  for_each_value(*this, [&](PtrValue &v) {
    if (const auto *b = std::get_if<BlockRef>(&v); b && b->site == site)
      v = replacement;
  });
}

void AbstractHeap::release(SiteId site) {
  HeapBlock *b = block(site);
  if (!b)
    return;
  b->state = SiteState::Freed;
  b->fields.clear();
  b->realloc_into.reset();
  b->realloc_from.reset();
  rewrite(site, FreedRef{site});
}

void AbstractHeap::drop(SiteId site) {
  rewrite(site, NullValue{});
  blocks.erase(site);
}

void AbstractHeap::clear_may_be_null(SiteId site) {
  for_each_value(*this, [&](PtrValue &v) {
    if (auto *b = std::get_if<BlockRef>(&v); b && b->site == site)
      b->may_be_null = false;
  });
}

void AbstractHeap::escape(const PtrValue &value) {
  std::deque<SiteId> work;
  if (const auto *b = std::get_if<BlockRef>(&value))
    work.push_back(b->site);
  while (!work.empty()) {
    SiteId site = work.front();
    work.pop_front();
    HeapBlock *blk = block(site);
    if (!blk || blk->escaped)
      continue;
    blk->escaped = true;
    for (const auto &[field, v] : blk->fields)
      if (const auto *b = std::get_if<BlockRef>(&v))
        work.push_back(b->site);
  }
}

std::set<SiteId>
AbstractHeap::reachable_from(const std::vector<PtrValue> &roots) const {
  std::set<SiteId> seen;
  std::deque<SiteId> work;
  for (const auto &v : roots)
    if (const auto *b = std::get_if<BlockRef>(&v))
      work.push_back(b->site);
  while (!work.empty()) {
    SiteId site = work.front();
    work.pop_front();
    if (!seen.insert(site).second)
      continue;
    const HeapBlock *blk = block(site);
    if (!blk || blk->state == SiteState::Freed)
      continue;
    for (const auto &[field, v] : blk->fields)
      if (const auto *b = std::get_if<BlockRef>(&v))
        work.push_back(b->site);
  }
  return seen;
}

std::vector<PtrValue> AbstractHeap::env_roots() const {
  std::vector<PtrValue> roots;
  for (const auto &[name, value] : env)
    roots.push_back(value);
  return roots;
}

std::map<SiteId, std::string> AbstractHeap::describe_references() const {
  std::map<SiteId, std::string> names;
  std::deque<std::pair<SiteId, std::string>> work;
  for (const auto &[name, value] : env)
    if (const auto *b = std::get_if<BlockRef>(&value))
      work.emplace_back(b->site, name);
  while (!work.empty()) {
    auto [site, path] = work.front();
    work.pop_front();
    if (!names.emplace(site, path).second)
      continue;
    const HeapBlock *blk = block(site);
    if (!blk || blk->state == SiteState::Freed)
      continue;
    for (const auto &[field, v] : blk->fields)
      if (const auto *b = std::get_if<BlockRef>(&v))
        work.emplace_back(b->site,
                          field == "*" ? "*" + path : path + "->" + field);
  }
  return names;
}

bool AbstractHeap::invariants_hold() const {
  bool ok = true;
  for_each_value(*this, [&](const PtrValue &v) {
    if (const auto *b = std::get_if<BlockRef>(&v)) {
      const HeapBlock *blk = block(b->site);
      if (!blk || blk->state == SiteState::Freed)
        ok = false;
    }
    if (const auto *f = std::get_if<FreedRef>(&v)) {
      const HeapBlock *blk = block(f->site);
      if (blk && blk->state != SiteState::Freed)
        ok = false;
    }
  });
  return ok;
}

PtrValue join_values(const PtrValue &a, const PtrValue &b) {
  if (a == b)
    return a;
  const auto *ba = std::get_if<BlockRef>(&a);
  const auto *bb = std::get_if<BlockRef>(&b);
  if (ba && bb && ba->site == bb->site) {
    BlockRef out = *ba;
    out.may_be_null = ba->may_be_null || bb->may_be_null;
    if (ba->offset != bb->offset)
      out.offset.reset();
    return out;
  }
  if (ba && std::holds_alternative<NullValue>(b)) {
    BlockRef out = *ba;
    out.may_be_null = true;
    return out;
  }
  if (bb && std::holds_alternative<NullValue>(a)) {
    BlockRef out = *bb;
    out.may_be_null = true;
    return out;
  }
  return UnknownValue{};
}

AbstractHeap join(const AbstractHeap &a, const AbstractHeap &b) {
  AbstractHeap out;
  for (const auto &[name, va] : a.env) {
    auto it = b.env.find(name);
    out.env[name] = it == b.env.end() ? va : join_values(va, it->second);
  }
  for (const auto &[name, vb] : b.env)
    if (!out.env.count(name))
      out.env[name] = vb;

  out.blocks = a.blocks;
  for (const auto &[site, bb] : b.blocks) {
    auto it = out.blocks.find(site);
    if (it == out.blocks.end()) {
      out.blocks[site] = bb;
      continue;
    }
    HeapBlock &ba = it->second;
    if (ba.state != bb.state) {
      // Freed on one side only: keep it live but stop reporting on it.
      ba.state = SiteState::Live;
      ba.escaped = true;
    }
    ba.escaped = ba.escaped || bb.escaped;
    ba.null_reported = ba.null_reported || bb.null_reported;
    ba.realloc_leak_reported =
        ba.realloc_leak_reported || bb.realloc_leak_reported;
    for (const auto &[field, vb] : bb.fields) {
      auto f = ba.fields.find(field);
      ba.fields[field] = f == ba.fields.end() ? UnknownValue{}
                                              : join_values(f->second, vb);
    }
    for (auto &[field, va] : ba.fields)
      if (!bb.fields.count(field) && !bb.zeroed)
        va = UnknownValue{};
  }

  // A FreedRef whose site is live after the join would break the
  // invariants; demote such values.
  auto fix = [&](PtrValue &v) {
    if (const auto *f = std::get_if<FreedRef>(&v)) {
      const HeapBlock *blk = out.block(f->site);
      if (blk && blk->state != SiteState::Freed)
        v = UnknownValue{};
    }
    if (const auto *r = std::get_if<BlockRef>(&v)) {
      const HeapBlock *blk = out.block(r->site);
      if (!blk || blk->state == SiteState::Freed)
        v = UnknownValue{};
    }
  };
  for (auto &[name, v] : out.env)
    fix(v);
  for (auto &[site, blk] : out.blocks)
    for (auto &[field, v] : blk.fields)
      fix(v);

  for (const auto &[name, id] : a.pending_stores) {
    auto it = b.pending_stores.find(name);
    if (it != b.pending_stores.end() && it->second == id)
      out.pending_stores[name] = id;
  }
  return out;
}

} // namespace memlab
