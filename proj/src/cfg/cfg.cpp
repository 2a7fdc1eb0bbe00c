//===-- cfg.cpp - Control-flow graph construction -------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/cfg.hpp"

#include <functional>
#include <sstream>

namespace memlab {

std::string_view to_string(EdgeKind kind) {
  switch (kind) {
  case EdgeKind::Fallthrough:
    return "fallthrough";
  case EdgeKind::TrueBranch:
    return "true-branch";
  case EdgeKind::FalseBranch:
    return "false-branch";
  case EdgeKind::LoopBack:
    return "loop-back";
  }
  return "?";
}

std::vector<const Edge *> Cfg::successors(int id) const {
  std::vector<const Edge *> out;
  for (const auto &e : edges)
    if (e.from == id)
      out.push_back(&e);
  return out;
}

std::vector<const Edge *> Cfg::predecessors(int id) const {
  std::vector<const Edge *> out;
  for (const auto &e : edges)
    if (e.to == id)
      out.push_back(&e);
  return out;
}

int Cfg::successor(int id, EdgeKind kind) const {
  for (const auto &e : edges)
    if (e.from == id && e.kind == kind)
      return e.to;
  return -1;
}

std::string Cfg::dump() const {
  std::ostringstream out;
  for (const auto &e : edges)
    out << e.from << " -> " << e.to << " [" << to_string(e.kind) << "]\n";
  return out.str();
}

namespace {

class Builder {
public:
  Cfg build(const FunctionDef &fn) {
    cfg_.function = fn.name;
    int entry = new_block();
    int exit = new_block();
    exit_ = exit;
    cur_ = new_block();
    close(entry, cur_);
    visit(*fn.body);
    if (cfg_.blocks[cur_].terminator.kind == Terminator::Kind::None)
      close(cur_, exit);
    cfg_.entry = entry;
    cfg_.exit = exit;
    compact();
    return std::move(cfg_);
  }

private:
  int new_block() {
    BasicBlock b;
    b.id = static_cast<int>(cfg_.blocks.size());
    cfg_.blocks.push_back(std::move(b));
    return cfg_.blocks.back().id;
  }

  void edge(int from, int to, EdgeKind kind) {
    cfg_.edges.push_back({from, to, kind});
  }

  void close(int from, int to) {
    cfg_.blocks[from].terminator.kind = Terminator::Kind::Jump;
    edge(from, to, EdgeKind::Fallthrough);
  }

  void visit(const Stmt &stmt) {
    if (const auto *block = stmt.as<Block>()) {
      for (const auto &child : block->body)
        visit(*child);
      return;
    }
    if (const auto *node = stmt.as<If>()) {
      int cond = cur_;
      cfg_.blocks[cond].terminator = {Terminator::Kind::Branch,
                                      node->cond.get(), &stmt};
      int then_block = new_block();
      edge(cond, then_block, EdgeKind::TrueBranch);
      cur_ = then_block;
      visit(*node->then_branch);
      int then_end = cur_;
      int else_end = -1;
      if (node->else_branch) {
        int else_block = new_block();
        edge(cond, else_block, EdgeKind::FalseBranch);
        cur_ = else_block;
        visit(*node->else_branch);
        else_end = cur_;
      }
      int join = new_block();
      close(then_end, join);
      if (else_end >= 0)
        close(else_end, join);
      else
        edge(cond, join, EdgeKind::FalseBranch);
      cur_ = join;
      return;
    }
    if (const auto *node = stmt.as<While>()) {
      int header = new_block();
      close(cur_, header);
      cfg_.blocks[header].terminator = {Terminator::Kind::Branch,
                                        node->cond.get(), &stmt};
      int body = new_block();
      edge(header, body, EdgeKind::TrueBranch);
      cur_ = body;
      visit(*node->body);
      cfg_.blocks[cur_].terminator.kind = Terminator::Kind::Jump;
      edge(cur_, header, EdgeKind::LoopBack);
      int after = new_block();
      edge(header, after, EdgeKind::FalseBranch);
      cur_ = after;
      return;
    }
    cfg_.blocks[cur_].statements.push_back(&stmt);
    if (stmt.is<Return>()) {
      cfg_.blocks[cur_].terminator = {Terminator::Kind::Return, nullptr, &stmt};
      edge(cur_, exit_, EdgeKind::Fallthrough);
      cur_ = new_block();
    }
  }

  // Drops empty blocks that no live code can reach and renumbers the rest
  // so that entry is 0 and exit is the last block.
  void compact() {
    std::size_t n = cfg_.blocks.size();
    auto mark_from = [&](int start, std::vector<bool> &seen) {
      std::vector<int> stack{start};
      while (!stack.empty()) {
        int b = stack.back();
        stack.pop_back();
        if (seen[static_cast<std::size_t>(b)])
          continue;
        seen[static_cast<std::size_t>(b)] = true;
        for (const auto &e : cfg_.edges)
          if (e.from == b)
            stack.push_back(e.to);
      }
    };
    std::vector<bool> reachable(n, false);
    mark_from(cfg_.entry, reachable);
    std::vector<bool> keep = reachable;
    for (std::size_t i = 0; i < n; ++i)
      if (!reachable[i] && !cfg_.blocks[i].statements.empty())
        mark_from(static_cast<int>(i), keep);

    std::vector<int> order;
    order.push_back(cfg_.entry);
    for (std::size_t i = 0; i < n; ++i) {
      int id = static_cast<int>(i);
      if (keep[i] && id != cfg_.entry && id != cfg_.exit)
        order.push_back(id);
    }
    order.push_back(cfg_.exit);

    std::vector<int> remap(n, -1);
    for (std::size_t i = 0; i < order.size(); ++i)
      remap[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

    std::vector<BasicBlock> blocks;
    for (int old : order) {
      BasicBlock b = std::move(cfg_.blocks[static_cast<std::size_t>(old)]);
      b.id = remap[static_cast<std::size_t>(old)];
      b.reachable = reachable[static_cast<std::size_t>(old)];
      blocks.push_back(std::move(b));
    }
    std::vector<Edge> edges;
    for (const auto &e : cfg_.edges) {
      int from = remap[static_cast<std::size_t>(e.from)];
      int to = remap[static_cast<std::size_t>(e.to)];
      if (from >= 0 && to >= 0)
        edges.push_back({from, to, e.kind});
    }
    cfg_.blocks = std::move(blocks);
    cfg_.edges = std::move(edges);
    cfg_.entry = 0;
    cfg_.exit = static_cast<int>(cfg_.blocks.size()) - 1;
  }

  Cfg cfg_;
  int cur_ = 0;
  int exit_ = 0;
};

} // namespace

Cfg build_cfg(const FunctionDef &fn) { return Builder().build(fn); }

std::map<std::string, Cfg> build_cfgs(const TranslationUnit &tu) {
  std::map<std::string, Cfg> out;
  for (const auto &fn : tu.functions)
    out.emplace(fn.name, build_cfg(fn));
  return out;
}

std::uint64_t count_acyclic_paths(const Cfg &cfg) {
  std::vector<std::int64_t> memo(cfg.blocks.size(), -1);
  std::function<std::uint64_t(int)> count = [&](int b) -> std::uint64_t {
    if (b == cfg.exit)
      return 1;
    auto &slot = memo[static_cast<std::size_t>(b)];
    if (slot >= 0)
      return static_cast<std::uint64_t>(slot);
    std::uint64_t total = 0;
    for (const Edge *e : cfg.successors(b))
      if (e->kind != EdgeKind::LoopBack)
        total += count(e->to);
    slot = static_cast<std::int64_t>(total);
    return total;
  };
  return count(cfg.entry);
}

} // namespace memlab
