//===-- memlab/cfg.hpp - Per-function control-flow graphs ------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_CFG_HPP
#define MEMLAB_CFG_HPP

#include "memlab/ast.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace memlab {

enum class EdgeKind { Fallthrough, TrueBranch, FalseBranch, LoopBack };

std::string_view to_string(EdgeKind kind);

struct Terminator {
  enum class Kind { Jump, Branch, Return, None };
  Kind kind = Kind::None;
  const Expr *condition = nullptr; // Branch only
  const Stmt *origin = nullptr;    // the If/While/Return producing it
};

struct BasicBlock {
  int id = 0;
  std::vector<const Stmt *> statements;
  Terminator terminator;
  bool reachable = true; // false for dead code kept after a return
};

struct Edge {
  int from = 0;
  int to = 0;
  EdgeKind kind = EdgeKind::Fallthrough;
};

class Cfg {
public:
  std::string function;
  std::vector<BasicBlock> blocks;
  std::vector<Edge> edges;
  int entry = 0;
  int exit = 0;

  const BasicBlock &block(int id) const { return blocks.at(id); }
  std::vector<const Edge *> successors(int id) const;
  std::vector<const Edge *> predecessors(int id) const;
  /// Successor over an edge of the given kind, or -1.
  int successor(int id, EdgeKind kind) const;

  /// One `from -> to [kind]` line per edge.
  std::string dump() const;
};

Cfg build_cfg(const FunctionDef &fn);

std::map<std::string, Cfg> build_cfgs(const TranslationUnit &tu);

/// Number of entry-to-exit paths, ignoring loop-back edges.
std::uint64_t count_acyclic_paths(const Cfg &cfg);

} // namespace memlab

#endif // MEMLAB_CFG_HPP
