//===-- engine.cpp - Path exploration and transfer functions --------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/analysis.hpp"
#include "memlab/parser.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace memlab {

AnalysisBudgetExceeded::AnalysisBudgetExceeded(const std::string &function,
                                               std::size_t budget)
    : Error("path budget of " + std::to_string(budget) +
            " exceeded in function `" + function + "`"),
      function_(function) {}

namespace {

enum class Mode { Summary, Check };

void walk_expr(const Expr &e, const std::function<void(const Expr &)> &fn) {
  fn(e);
  std::visit(
      [&](const auto &n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Deref> ||
                      std::is_same_v<T, AddressOf> ||
                      std::is_same_v<T, UnaryNot> ||
                      std::is_same_v<T, Negate> || std::is_same_v<T, Cast>) {
          walk_expr(*n.operand, fn);
        } else if constexpr (std::is_same_v<T, FieldAccess>) {
          walk_expr(*n.base, fn);
        } else if constexpr (std::is_same_v<T, Call>) {
          for (const auto &a : n.args)
            walk_expr(*a, fn);
        } else if constexpr (std::is_same_v<T, BinOp>) {
          walk_expr(*n.lhs, fn);
          walk_expr(*n.rhs, fn);
        }
        // sizeof operands are not evaluated
      },
      e.node);
}

void walk_stmt(const Stmt &s, const std::function<void(const Stmt &)> &on_stmt,
               const std::function<void(const Expr &)> &on_expr) {
  on_stmt(s);
  std::visit(
      [&](const auto &n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, VarDecl>) {
          if (n.init)
            walk_expr(*n.init, on_expr);
        } else if constexpr (std::is_same_v<T, Assign>) {
          walk_expr(*n.target, on_expr);
          walk_expr(*n.value, on_expr);
        } else if constexpr (std::is_same_v<T, ExprStmt>) {
          walk_expr(*n.expr, on_expr);
        } else if constexpr (std::is_same_v<T, If>) {
          walk_expr(*n.cond, on_expr);
          walk_stmt(*n.then_branch, on_stmt, on_expr);
          if (n.else_branch)
            walk_stmt(*n.else_branch, on_stmt, on_expr);
        } else if constexpr (std::is_same_v<T, While>) {
          walk_expr(*n.cond, on_expr);
          walk_stmt(*n.body, on_stmt, on_expr);
        } else if constexpr (std::is_same_v<T, Return>) {
          if (n.value)
            walk_expr(*n.value, on_expr);
        } else if constexpr (std::is_same_v<T, Block>) {
          for (const auto &c : n.body)
            walk_stmt(*c, on_stmt, on_expr);
        }
      },
      s.node);
}

std::set<std::string> callees_of(const FunctionDef &fn) {
  std::set<std::string> out;
  walk_stmt(
      *fn.body, [](const Stmt &) {},
      [&](const Expr &e) {
        if (const auto *c = e.as<Call>())
          out.insert(c->callee);
      });
  return out;
}

/// Functions on a call-graph cycle.
std::set<std::string> recursive_functions(const TranslationUnit &tu) {
  std::map<std::string, std::set<std::string>> graph;
  for (const auto &fn : tu.functions)
    graph[fn.name] = callees_of(fn);
  std::set<std::string> out;
  for (const auto &fn : tu.functions) {
    std::set<std::string> seen;
    std::vector<std::string> work(graph[fn.name].begin(),
                                  graph[fn.name].end());
    while (!work.empty()) {
      std::string cur = work.back();
      work.pop_back();
      if (cur == fn.name) {
        out.insert(fn.name);
        break;
      }
      if (!graph.count(cur) || !seen.insert(cur).second)
        continue;
      for (const auto &n : graph[cur])
        work.push_back(n);
    }
  }
  return out;
}

bool is_null_literal(const Expr &e) {
  if (e.is<NullLit>())
    return true;
  if (const auto *i = e.as<IntLit>())
    return i->value == 0;
  if (const auto *c = e.as<Cast>())
    return is_null_literal(*c->operand);
  return false;
}

bool sizeof_deref_shape(const Expr &e) {
  bool found = false;
  walk_expr(e, [&](const Expr &x) {
    if (const auto *s = x.as<SizeofExpr>(); s && s->deref_of_ident)
      found = true;
  });
  return found;
}

struct PathState {
  AbstractHeap heap;
  int block = 0;
  std::map<std::pair<int, int>, int> back_edges;
  std::map<const Expr *, int> alloc_instances;
  bool dead = false;
};

struct Slot {
  enum class Kind { None, Var, Field } kind = Kind::None;
  std::string name; // variable
  SiteId site = 0;
  std::string field;
};

class FunctionAnalyzer {
public:
  FunctionAnalyzer(const TranslationUnit *tu, const FunctionDef &fn,
                   const Cfg &cfg, const CheckerConfig &config,
                   const AnalysisOptions &options, Mode mode,
                   const std::map<std::string, FunctionSummary> *summaries,
                   const std::set<std::string> *recursive)
      : tu_(tu), fn_(fn), cfg_(cfg), config_(config), options_(options),
        mode_(mode), summaries_(summaries), recursive_(recursive) {
    ctx_.config = &config_;
    ctx_.file = tu_ && tu_->unit ? tu_->unit->path() : std::string();
    ctx_.function = fn_.name;
    collect_locals();
  }

  void run() {
    std::vector<PathState> work;
    work.push_back(initial_state());
    while (!work.empty()) {
      if (paths_ >= options_.path_budget) {
        if (options_.strict_budget)
          throw AnalysisBudgetExceeded(fn_.name, options_.path_budget);
        incomplete_ = true;
        run_joined(std::move(work));
        break;
      }
      PathState st = std::move(work.back());
      work.pop_back();
      step(std::move(st), work);
    }
    if (mode_ == Mode::Check)
      for (auto &f : check_dead_store(stores_, ctx_))
        findings_.push_back(std::move(f));
  }

  std::vector<Finding> &findings() { return findings_; }
  bool incomplete() const { return incomplete_; }
  std::size_t paths() const { return paths_; }
  int max_back_edge() const { return max_back_edge_; }

  FunctionSummary summary() const {
    FunctionSummary s;
    s.name = fn_.name;
    s.frees_params = frees_params_;
    s.param_deref = param_deref_;
    s.stores_params = stores_params_;
    s.reallocs_params = reallocs_params_;
    bool all_null = !returns_.empty();
    for (const auto &r : returns_) {
      s.returns_fresh_allocation |= r.fresh;
      s.may_return_null |= r.may_null;
      all_null &= r.null;
    }
    s.returns_null_only = all_null;
    return s;
  }

private:
  struct ReturnEvent {
    bool fresh = false;
    bool may_null = false;
    bool null = false;
  };

  const TranslationUnit *tu_;
  const FunctionDef &fn_;
  const Cfg &cfg_;
  const CheckerConfig &config_;
  const AnalysisOptions &options_;
  Mode mode_;
  const std::map<std::string, FunctionSummary> *summaries_;
  const std::set<std::string> *recursive_;
  CheckContext ctx_;

  std::set<std::string> locals_;
  std::set<std::string> address_taken_;
  std::map<const Stmt *, std::set<std::string>> loop_writes_;

  std::map<std::pair<const Expr *, int>, SiteId> site_ids_;
  SiteId next_site_ = 0;

  std::vector<StoreRecord> stores_;
  std::map<std::tuple<std::string, int, int>, int> store_index_;

  std::vector<Finding> findings_;
  std::vector<ReturnEvent> returns_;
  std::set<int> frees_params_, param_deref_, stores_params_, reallocs_params_;

  std::size_t paths_ = 0;
  int max_back_edge_ = 0;
  bool incomplete_ = false;
  bool joined_ = false;

  // --- setup -------------------------------------------------------------

  void collect_locals() {
    for (const auto &p : fn_.params)
      if (!p.name.empty())
        locals_.insert(p.name);
    std::vector<const While *> loops;
    walk_stmt(
        *fn_.body,
        [&](const Stmt &s) {
          if (const auto *d = s.as<VarDecl>())
            locals_.insert(d->name);
        },
        [&](const Expr &e) {
          if (const auto *a = e.as<AddressOf>())
            if (const auto *id = a->operand->as<Ident>())
              address_taken_.insert(id->name);
        });
    walk_stmt(
        *fn_.body,
        [&](const Stmt &s) {
          const auto *w = s.as<While>();
          if (!w)
            return;
          std::set<std::string> &writes = loop_writes_[&s];
          walk_stmt(
              *w->body,
              [&](const Stmt &inner) {
                if (const auto *d = inner.as<VarDecl>())
                  writes.insert(d->name);
                if (const auto *a = inner.as<Assign>())
                  if (const auto *id = a->target->as<Ident>())
                    writes.insert(id->name);
              },
              [](const Expr &) {});
        },
        [](const Expr &) {});
  }

  bool is_local(const std::string &name) const {
    return locals_.count(name) != 0;
  }

  bool tracks_stores(const std::string &name) const {
    return mode_ == Mode::Check && is_local(name) &&
           !address_taken_.count(name);
  }

  SiteId site_for(const Expr *key, int instance) {
    auto [it, inserted] = site_ids_.try_emplace({key, instance}, next_site_);
    if (inserted)
      ++next_site_;
    return it->second;
  }

  PathState initial_state() {
    PathState st;
    st.block = cfg_.entry;
    for (std::size_t i = 0; i < fn_.params.size(); ++i) {
      const Param &p = fn_.params[i];
      if (p.name.empty())
        continue;
      if (mode_ == Mode::Summary && p.type.is_pointer()) {
        SiteId site = site_for(nullptr, -static_cast<int>(i) - 1);
        HeapBlock blk;
        blk.origin = SiteOrigin::Param;
        blk.line = p.loc.line;
        blk.column = p.loc.column;
        blk.allocator = p.name;
        blk.param_index = static_cast<int>(i);
        st.heap.blocks[site] = blk;
        st.heap.env[p.name] = BlockRef{site, 0, true};
      } else {
        st.heap.env[p.name] = UnknownValue{};
      }
    }
    return st;
  }

  // --- reporting ---------------------------------------------------------

  void report(std::optional<Finding> f) {
    if (f && mode_ == Mode::Check)
      findings_.push_back(std::move(*f));
  }

  void record_store(const std::string &var, SourceLoc loc,
                    const PtrValue &value, PathState &st) {
    if (!tracks_stores(var))
      return;
    auto key = std::make_tuple(var, loc.line, loc.column);
    auto it = store_index_.find(key);
    int id;
    if (it == store_index_.end()) {
      id = static_cast<int>(stores_.size());
      StoreRecord rec;
      rec.var = var;
      rec.loc = loc;
      rec.null_or_zero = std::holds_alternative<NullValue>(value);
      stores_.push_back(rec);
      store_index_.emplace(key, id);
    } else {
      id = it->second;
    }
    st.heap.pending_stores[var] = id;
  }

  void mark_used(const std::string &var, PathState &st) {
    auto it = st.heap.pending_stores.find(var);
    if (it == st.heap.pending_stores.end())
      return;
    stores_[it->second].used = true;
    st.heap.pending_stores.erase(it);
  }

  // --- heap helpers ------------------------------------------------------

  PtrValue allocate(const Expr &call, SiteOrigin origin,
                    const std::string &allocator, bool zeroed,
                    PathState &st) {
    int instance = st.alloc_instances[&call]++;
    SiteId site = site_for(&call, instance);
    HeapBlock blk;
    blk.origin = origin;
    blk.line = call.loc.line;
    blk.column = call.loc.column;
    blk.allocator = allocator;
    blk.zeroed = zeroed;
    st.heap.blocks[site] = blk;
    return BlockRef{site, 0, true};
  }

  void escape(const PtrValue &v, PathState &st) {
    if (const auto *b = std::get_if<BlockRef>(&v))
      if (const HeapBlock *blk = st.heap.block(b->site);
          blk && blk->origin == SiteOrigin::Param)
        stores_params_.insert(blk->param_index);
    st.heap.escape(v);
  }

  void release_site(SiteId site, PathState &st) {
    HeapBlock *blk = st.heap.block(site);
    if (!blk)
      return;
    if (blk->origin == SiteOrigin::Param)
      frees_params_.insert(blk->param_index);
    if (blk->realloc_into)
      if (HeapBlock *next = st.heap.block(*blk->realloc_into);
          next && next->realloc_from == site)
        next->realloc_from.reset();
    if (!config_.struct_field_tracking)
      for (const auto &[field, v] : blk->fields)
        st.heap.escape(v);
    st.heap.release(site);
  }

  void refine_null(SiteId site, PathState &st) {
    HeapBlock *blk = st.heap.block(site);
    if (!blk)
      return;
    if (blk->realloc_from) {
      if (HeapBlock *old = st.heap.block(*blk->realloc_from)) {
        old->state = SiteState::Live;
        old->realloc_into.reset();
      }
    }
    st.heap.drop(site);
  }

  void refine_nonnull(SiteId site, PathState &st) {
    HeapBlock *blk = st.heap.block(site);
    if (!blk)
      return;
    st.heap.clear_may_be_null(site);
    if (blk->realloc_from) {
      SiteId old = *blk->realloc_from;
      blk->realloc_from.reset();
      if (HeapBlock *o = st.heap.block(old)) {
        o->realloc_into.reset();
        release_site(old, st);
      }
    }
  }

  // --- evaluation --------------------------------------------------------

  void check_deref(const PtrValue &ptr, const Expr &ptr_expr, SourceLoc at,
                   PathState &st) {
    if (mode_ == Mode::Summary) {
      if (const auto *b = std::get_if<BlockRef>(&ptr))
        if (const HeapBlock *blk = st.heap.block(b->site);
            blk && blk->origin == SiteOrigin::Param)
          param_deref_.insert(blk->param_index);
    } else {
      report(check_null_deref(st.heap, ptr, to_source(ptr_expr), at, ctx_));
    }
    if (std::holds_alternative<NullValue>(ptr)) {
      st.dead = true;
      return;
    }
    if (const auto *b = std::get_if<BlockRef>(&ptr); b && b->may_be_null)
      if (HeapBlock *blk = st.heap.block(b->site))
        blk->null_reported = true;
  }

  PtrValue read_var(const std::string &name, SourceLoc at, PathState &st) {
    if (!is_local(name))
      return UnknownValue{};
    mark_used(name, st);
    auto it = st.heap.env.find(name);
    if (it == st.heap.env.end())
      return UnknownValue{};
    if (std::holds_alternative<UninitValue>(it->second)) {
      if (mode_ == Mode::Check)
        report(check_uninit_use(st.heap, name, at, ctx_));
      it->second = UnknownValue{};
      return UnknownValue{};
    }
    return it->second;
  }

  PtrValue load(const PtrValue &ptr, const std::string &field, SourceLoc at,
                PathState &st) {
    if (const auto *b = std::get_if<BlockRef>(&ptr)) {
      HeapBlock *blk = st.heap.block(b->site);
      if (!blk || blk->state == SiteState::Freed || !b->offset ||
          *b->offset != 0)
        return UnknownValue{};
      auto it = blk->fields.find(field);
      if (it != blk->fields.end())
        return it->second;
      if (blk->zeroed)
        return NullValue{};
      return UnknownValue{};
    }
    if (const auto *s = std::get_if<StackAddr>(&ptr)) {
      if (field == "*")
        return read_var(s->var, at, st);
    }
    return UnknownValue{};
  }

  Slot lvalue(const Expr &e, PathState &st) {
    Slot slot;
    if (const auto *id = e.as<Ident>()) {
      if (is_local(id->name)) {
        slot.kind = Slot::Kind::Var;
        slot.name = id->name;
      }
      return slot;
    }
    if (const auto *d = e.as<Deref>()) {
      PtrValue ptr = eval(*d->operand, st);
      check_deref(ptr, *d->operand, e.loc, st);
      if (st.dead)
        return slot;
      if (const auto *b = std::get_if<BlockRef>(&ptr);
          b && b->offset && *b->offset == 0) {
        slot.kind = Slot::Kind::Field;
        slot.site = b->site;
        slot.field = "*";
      } else if (const auto *s = std::get_if<StackAddr>(&ptr)) {
        slot.kind = Slot::Kind::Var;
        slot.name = s->var;
      }
      return slot;
    }
    if (const auto *f = e.as<FieldAccess>()) {
      if (f->via_pointer) {
        PtrValue ptr = eval(*f->base, st);
        check_deref(ptr, *f->base, e.loc, st);
        if (st.dead)
          return slot;
        if (const auto *b = std::get_if<BlockRef>(&ptr);
            b && b->offset && *b->offset == 0) {
          slot.kind = Slot::Kind::Field;
          slot.site = b->site;
          slot.field = f->field;
        }
        return slot;
      }
      Slot inner = lvalue(*f->base, st);
      if (inner.kind == Slot::Kind::Field && inner.field == "*") {
        inner.field = f->field;
        return inner;
      }
      return slot;
    }
    return slot;
  }

  void write(const Slot &slot, const PtrValue &v, SourceLoc loc,
             PathState &st) {
    switch (slot.kind) {
    case Slot::Kind::Var:
      st.heap.env[slot.name] = v;
      record_store(slot.name, loc, v, st);
      return;
    case Slot::Kind::Field: {
      HeapBlock *blk = st.heap.block(slot.site);
      if (!blk || blk->state == SiteState::Freed) {
        escape(v, st);
        return;
      }
      blk->fields[slot.field] = v;
      if (blk->escaped || blk->origin == SiteOrigin::Param)
        escape(v, st);
      return;
    }
    case Slot::Kind::None:
      escape(v, st);
      return;
    }
  }

  PtrValue address_of(const Expr &operand, PathState &st) {
    if (const auto *id = operand.as<Ident>()) {
      if (is_local(id->name))
        return StackAddr{id->name};
      return UnknownValue{};
    }
    if (const auto *d = operand.as<Deref>())
      return eval(*d->operand, st);
    if (const auto *f = operand.as<FieldAccess>()) {
      if (f->via_pointer) {
        PtrValue base = eval(*f->base, st);
        if (const auto *b = std::get_if<BlockRef>(&base)) {
          BlockRef inner = *b;
          inner.offset.reset();
          return inner;
        }
      }
      return UnknownValue{};
    }
    return UnknownValue{};
  }

  PtrValue arithmetic(BinaryOp op, const PtrValue &lhs, const PtrValue &rhs,
                      const Expr &rhs_expr) {
    if (op != BinaryOp::Add && op != BinaryOp::Sub)
      return UnknownValue{};
    const auto *b = std::get_if<BlockRef>(&lhs);
    if (!b)
      return UnknownValue{};
    BlockRef out = *b;
    const auto *lit = rhs_expr.as<IntLit>();
    if (lit && out.offset)
      out.offset = op == BinaryOp::Add ? *out.offset + lit->value
                                       : *out.offset - lit->value;
    else if (!std::holds_alternative<NullValue>(rhs))
      out.offset.reset();
    return out;
  }

  PtrValue do_free(const PtrValue &v, const Expr &arg, SourceLoc at,
                   PathState &st) {
    report(check_invalid_free(st.heap, v, to_source(arg), at, ctx_));
    if (const auto *b = std::get_if<BlockRef>(&v)) {
      const HeapBlock *blk = st.heap.block(b->site);
      if (blk && blk->state != SiteState::Freed)
        release_site(b->site, st);
    }
    return UnknownValue{};
  }

  PtrValue do_realloc(const PtrValue &old, const Expr &call,
                      const std::string &allocator, PathState &st) {
    PtrValue fresh = allocate(call, SiteOrigin::Realloc, allocator, false, st);
    SiteId next = std::get<BlockRef>(fresh).site;
    if (const auto *b = std::get_if<BlockRef>(&old);
        b && b->offset && *b->offset == 0) {
      HeapBlock *o = st.heap.block(b->site);
      if (o && o->state == SiteState::Live) {
        o->state = SiteState::ReallocPending;
        o->realloc_into = next;
        HeapBlock &n = *st.heap.block(next);
        n.realloc_from = b->site;
        n.fields = o->fields;
      }
    } else {
      escape(old, st);
    }
    return fresh;
  }

  PtrValue call(const Expr &e, const Call &c, PathState &st) {
    std::vector<PtrValue> vals;
    for (const auto &a : c.args) {
      vals.push_back(eval(*a, st));
      if (st.dead)
        return UnknownValue{};
    }
    const std::string &name = c.callee;
    auto arg_text = [&](std::size_t i) -> const Expr & { return *c.args[i]; };

    if (name == "malloc" || name == "calloc") {
      bool deref_shape = false;
      for (const auto &a : c.args)
        deref_shape |= sizeof_deref_shape(*a);
      if (deref_shape && !config_.sizeof_deref_tracking)
        return UnknownValue{};
      return allocate(e,
                      name == "malloc" ? SiteOrigin::Malloc
                                       : SiteOrigin::Calloc,
                      name, name == "calloc", st);
    }
    if (name == "realloc" && !vals.empty())
      return do_realloc(vals[0], e, name, st);
    if (name == "free" && !vals.empty())
      return do_free(vals[0], arg_text(0), e.loc, st);
    if (name == "printf")
      return UnknownValue{};
    if ((name == "memset" || name == "memcpy" || name == "memmove") &&
        !vals.empty()) {
      std::size_t n = name == "memset" ? 1 : std::min<std::size_t>(2, vals.size());
      for (std::size_t i = 0; i < n && !st.dead; ++i)
        check_deref(vals[i], arg_text(i), e.loc, st);
      return st.dead ? UnknownValue{} : vals[0];
    }

    const FunctionDef *callee = tu_ ? tu_->function(name) : nullptr;
    bool use_summary = mode_ == Mode::Check && callee && summaries_ &&
                       config_.interprocedural && summaries_->count(name) &&
                       !(recursive_ && recursive_->count(name)) &&
                       name != fn_.name;
    if (!use_summary) {
      for (const auto &v : vals)
        escape(v, st);
      return UnknownValue{};
    }
    const FunctionSummary &s = summaries_->at(name);
    auto index_ok = [&](int i) {
      return i >= 0 && static_cast<std::size_t>(i) < vals.size();
    };
    for (int i : s.param_deref) {
      if (!index_ok(i))
        continue;
      check_deref(vals[i], arg_text(i), e.loc, st);
      if (st.dead)
        return UnknownValue{};
    }
    for (int i : s.frees_params)
      if (index_ok(i))
        do_free(vals[i], arg_text(i), e.loc, st);
    for (int i : s.stores_params)
      if (index_ok(i))
        escape(vals[i], st);
    for (int i : s.reallocs_params)
      if (index_ok(i))
        return do_realloc(vals[i], e, name, st);
    if (s.returns_null_only)
      return NullValue{};
    if (s.returns_fresh_allocation) {
      PtrValue v = allocate(e, SiteOrigin::CallResult, name, false, st);
      std::get<BlockRef>(v).may_be_null = s.may_return_null;
      return v;
    }
    return UnknownValue{};
  }

  PtrValue eval(const Expr &e, PathState &st) {
    if (st.dead)
      return UnknownValue{};
    if (const auto *id = e.as<Ident>())
      return read_var(id->name, e.loc, st);
    if (const auto *i = e.as<IntLit>())
      return i->value == 0 ? PtrValue{NullValue{}} : PtrValue{NonZero{}};
    if (e.is<NullLit>())
      return NullValue{};
    if (e.is<StringLit>())
      return NonZero{};
    if (const auto *d = e.as<Deref>()) {
      PtrValue ptr = eval(*d->operand, st);
      check_deref(ptr, *d->operand, e.loc, st);
      if (st.dead)
        return UnknownValue{};
      return load(ptr, "*", e.loc, st);
    }
    if (const auto *a = e.as<AddressOf>())
      return address_of(*a->operand, st);
    if (const auto *f = e.as<FieldAccess>()) {
      if (f->via_pointer) {
        PtrValue ptr = eval(*f->base, st);
        check_deref(ptr, *f->base, e.loc, st);
        if (st.dead)
          return UnknownValue{};
        return load(ptr, f->field, e.loc, st);
      }
      Slot s = lvalue(e, st);
      if (s.kind == Slot::Kind::Field)
        return load(BlockRef{s.site, 0, false}, s.field, e.loc, st);
      // Reading a member of a local struct counts as reading the struct.
      if (const auto *id = f->base->as<Ident>())
        mark_used(id->name, st);
      return UnknownValue{};
    }
    if (const auto *c = e.as<Call>())
      return call(e, *c, st);
    if (e.is<SizeofType>() || e.is<SizeofExpr>())
      return NonZero{};
    if (const auto *b = e.as<BinOp>()) {
      PtrValue lhs = eval(*b->lhs, st);
      PtrValue rhs = eval(*b->rhs, st);
      if (st.dead)
        return UnknownValue{};
      return arithmetic(b->op, lhs, rhs, *b->rhs);
    }
    if (const auto *n = e.as<UnaryNot>()) {
      PtrValue v = eval(*n->operand, st);
      if (std::holds_alternative<NullValue>(v))
        return NonZero{};
      if (std::holds_alternative<NonZero>(v) ||
          std::holds_alternative<StackAddr>(v))
        return NullValue{};
      if (const auto *r = std::get_if<BlockRef>(&v); r && !r->may_be_null)
        return NullValue{};
      return UnknownValue{};
    }
    if (const auto *n = e.as<Negate>()) {
      PtrValue v = eval(*n->operand, st);
      if (std::holds_alternative<NullValue>(v) ||
          std::holds_alternative<NonZero>(v))
        return v;
      return UnknownValue{};
    }
    if (const auto *c = e.as<Cast>())
      return eval(*c->operand, st);
    return UnknownValue{};
  }

  // --- conditions --------------------------------------------------------

  std::vector<PathState> assume(const Expr &c, bool truth, PathState st) {
    if (const auto *n = c.as<UnaryNot>())
      return assume(*n->operand, !truth, std::move(st));
    if (const auto *c2 = c.as<Cast>())
      return assume(*c2->operand, truth, std::move(st));
    if (const auto *b = c.as<BinOp>()) {
      if (b->op == BinaryOp::And || b->op == BinaryOp::Or) {
        // `a && b` is true iff both hold; `a || b` is false iff both fail.
        bool both = (b->op == BinaryOp::And) == truth;
        std::vector<PathState> out;
        if (both) {
          for (auto &s : assume(*b->lhs, truth, std::move(st)))
            for (auto &s2 : s.dead ? std::vector<PathState>{std::move(s)}
                                   : assume(*b->rhs, truth, std::move(s)))
              out.push_back(std::move(s2));
        } else {
          // short circuit on the lhs, otherwise decided by the rhs
          PathState copy = st;
          for (auto &s : assume(*b->lhs, truth, std::move(st)))
            out.push_back(std::move(s));
          for (auto &s : assume(*b->lhs, !truth, std::move(copy)))
            for (auto &s2 : s.dead ? std::vector<PathState>{std::move(s)}
                                   : assume(*b->rhs, truth, std::move(s)))
              out.push_back(std::move(s2));
        }
        return out;
      }
      if (b->op == BinaryOp::Eq || b->op == BinaryOp::Ne) {
        const Expr *other = nullptr;
        if (is_null_literal(*b->rhs))
          other = b->lhs.get();
        else if (is_null_literal(*b->lhs))
          other = b->rhs.get();
        if (other) {
          bool want_null = (b->op == BinaryOp::Eq) == truth;
          return assume_null(*other, want_null, std::move(st));
        }
      }
      eval(c, st);
      return {std::move(st)};
    }
    return assume_null(c, !truth, std::move(st));
  }

  std::vector<PathState> assume_null(const Expr &e, bool want_null,
                                     PathState st) {
    PtrValue v = eval(e, st);
    if (st.dead)
      return {std::move(st)};
    if (std::holds_alternative<NullValue>(v)) {
      if (!want_null)
        return {};
      return {std::move(st)};
    }
    if (std::holds_alternative<NonZero>(v) ||
        std::holds_alternative<StackAddr>(v) ||
        std::holds_alternative<FreedRef>(v)) {
      if (want_null)
        return {};
      return {std::move(st)};
    }
    if (const auto *b = std::get_if<BlockRef>(&v)) {
      SiteId site = b->site;
      if (want_null) {
        if (!b->may_be_null || (b->offset && *b->offset != 0))
          return {};
        refine_null(site, st);
      } else {
        refine_nonnull(site, st);
      }
      return {std::move(st)};
    }
    if (want_null)
      if (const auto *id = e.as<Ident>(); id && is_local(id->name))
        st.heap.env[id->name] = NullValue{};
    return {std::move(st)};
  }

  // --- statements --------------------------------------------------------

  void leak_check(PathState &st, const std::vector<PtrValue> &roots, int line,
                  const AbstractHeap &before) {
    LeakCheck lc = check_memory_leak(st.heap, roots, line, before, ctx_);
    if (mode_ == Mode::Check)
      for (auto &f : lc.findings)
        findings_.push_back(std::move(f));
    for (SiteId s : lc.realloc_orphans)
      if (HeapBlock *blk = st.heap.block(s))
        blk->realloc_leak_reported = true;
    for (SiteId s : lc.leaked) {
      HeapBlock *blk = st.heap.block(s);
      if (!blk)
        continue;
      if (blk->realloc_from)
        if (HeapBlock *old = st.heap.block(*blk->realloc_from);
            old && old->state == SiteState::ReallocPending)
          release_site(*blk->realloc_from, st);
      st.heap.rewrite(s, UnknownValue{});
      st.heap.blocks.erase(s);
    }
  }

  bool has_live_blocks(const PathState &st) const {
    for (const auto &[site, blk] : st.heap.blocks)
      if (blk.state != SiteState::Freed && blk.origin != SiteOrigin::Param)
        return true;
    return false;
  }

  /// Returns true when the statement ends the path (return).
  bool exec(const Stmt &s, PathState &st) {
    const bool track = has_live_blocks(st);
    AbstractHeap before;
    if (track)
      before = st.heap;

    if (const auto *d = s.as<VarDecl>()) {
      PtrValue v;
      if (d->init) {
        v = eval(*d->init, st);
      } else if (address_taken_.count(d->name) ||
                 (!d->type.is_pointer() && d->type.base == BaseType::Struct)) {
        v = UnknownValue{};
      } else {
        v = UninitValue{};
      }
      if (st.dead)
        return false;
      st.heap.env[d->name] = v;
      if (d->init)
        record_store(d->name, d->name_loc, v, st);
      else
        st.heap.pending_stores.erase(d->name);
    } else if (const auto *a = s.as<Assign>()) {
      PtrValue v = eval(*a->value, st);
      if (st.dead)
        return false;
      Slot slot = lvalue(*a->target, st);
      if (st.dead)
        return false;
      write(slot, v, a->target->loc, st);
    } else if (const auto *e = s.as<ExprStmt>()) {
      eval(*e->expr, st);
      if (st.dead)
        return false;
    } else if (const auto *r = s.as<Return>()) {
      PtrValue v = r->value ? eval(*r->value, st) : PtrValue{UnknownValue{}};
      if (st.dead)
        return false;
      if (mode_ == Mode::Summary)
        record_return(v, st);
      leak_check(st, {v}, s.loc.line, track ? before : st.heap);
      return true;
    }
    if (track || has_live_blocks(st))
      leak_check(st, st.heap.env_roots(), s.loc.line, before);
    return false;
  }

  void record_return(const PtrValue &v, const PathState &st) {
    ReturnEvent ev;
    if (std::holds_alternative<NullValue>(v)) {
      ev.null = true;
      ev.may_null = true;
    } else if (const auto *b = std::get_if<BlockRef>(&v)) {
      const HeapBlock *blk = st.heap.block(b->site);
      if (blk && blk->origin != SiteOrigin::Param &&
          blk->state == SiteState::Live) {
        ev.fresh = true;
        ev.may_null = b->may_be_null;
        if (blk->realloc_from)
          if (const HeapBlock *old = st.heap.block(*blk->realloc_from);
              old && old->origin == SiteOrigin::Param)
            reallocs_params_.insert(old->param_index);
      }
    }
    returns_.push_back(ev);
  }

  void widen(PathState &st, int header) {
    const Stmt *origin = cfg_.block(header).terminator.origin;
    auto it = loop_writes_.find(origin);
    if (it == loop_writes_.end())
      return;
    for (const auto &var : it->second) {
      auto v = st.heap.env.find(var);
      if (v == st.heap.env.end())
        continue;
      escape(v->second, st);
      v->second = UnknownValue{};
      mark_used(var, st);
    }
  }

  void follow(PathState st, const Edge &edge, std::vector<PathState> &out) {
    if (edge.kind == EdgeKind::LoopBack && !joined_) {
      int &n = st.back_edges[{edge.from, edge.to}];
      if (n >= options_.unroll_bound) {
        widen(st, edge.to);
        int after = cfg_.successor(edge.to, EdgeKind::FalseBranch);
        if (after < 0) {
          ++paths_;
          return;
        }
        st.block = after;
        out.push_back(std::move(st));
        return;
      }
      ++n;
      max_back_edge_ = std::max(max_back_edge_, n);
    }
    st.block = edge.to;
    out.push_back(std::move(st));
  }

  void finish_path(PathState &st) {
    if (has_live_blocks(st))
      leak_check(st, {}, fn_.end_loc.line, st.heap);
    ++paths_;
  }

  void step(PathState st, std::vector<PathState> &out) {
    if (st.block == cfg_.exit) {
      finish_path(st);
      return;
    }
    const BasicBlock &b = cfg_.block(st.block);
    for (const Stmt *s : b.statements) {
      bool ended = exec(*s, st);
      if (st.dead || ended) {
        ++paths_;
        return;
      }
    }
    switch (b.terminator.kind) {
    case Terminator::Kind::Return:
      ++paths_;
      return;
    case Terminator::Kind::Jump: {
      auto succ = cfg_.successors(b.id);
      if (succ.empty()) {
        ++paths_;
        return;
      }
      follow(std::move(st), *succ.front(), out);
      return;
    }
    case Terminator::Kind::Branch: {
      const Expr &cond = *b.terminator.condition;
      const Edge *t = nullptr;
      const Edge *f = nullptr;
      for (const Edge *e : cfg_.successors(b.id)) {
        if (e->kind == EdgeKind::TrueBranch)
          t = e;
        else if (e->kind == EdgeKind::FalseBranch)
          f = e;
      }
      PathState copy = st;
      auto falses = assume(cond, false, std::move(copy));
      auto trues = assume(cond, true, std::move(st));
      if (falses.empty() && trues.empty())
        ++paths_;
      for (auto *group : {&falses, &trues}) {
        const Edge *edge = group == &falses ? f : t;
        for (auto &s : *group) {
          if (s.dead || !edge) {
            ++paths_;
            continue;
          }
          follow(std::move(s), *edge, out);
        }
      }
      return;
    }
    case Terminator::Kind::None: {
      auto succ = cfg_.successors(b.id);
      if (succ.empty()) {
        finish_path(st);
        return;
      }
      follow(std::move(st), *succ.front(), out);
      return;
    }
    }
  }

  // --- joined fallback ---------------------------------------------------

  void merge_into(std::map<int, PathState> &entry, PathState s,
                  std::set<int> &queue) {
    auto it = entry.find(s.block);
    if (it == entry.end()) {
      queue.insert(s.block);
      entry.emplace(s.block, std::move(s));
      return;
    }
    PathState &cur = it->second;
    for (const auto &[var, id] : s.heap.pending_stores) {
      auto other = cur.heap.pending_stores.find(var);
      if (other == cur.heap.pending_stores.end() || other->second != id)
        stores_[id].used = true;
    }
    for (const auto &[var, id] : cur.heap.pending_stores) {
      auto other = s.heap.pending_stores.find(var);
      if (other == s.heap.pending_stores.end() || other->second != id)
        stores_[id].used = true;
    }
    AbstractHeap joined = join(cur.heap, s.heap);
    for (const auto &[expr, n] : s.alloc_instances)
      cur.alloc_instances[expr] = std::max(cur.alloc_instances[expr], n);
    if (!(joined == cur.heap)) {
      cur.heap = std::move(joined);
      queue.insert(s.block);
    }
  }

  void run_joined(std::vector<PathState> pending) {
    joined_ = true;
    std::map<int, PathState> entry;
    std::set<int> queue;
    std::map<int, int> visits;
    for (auto &s : pending)
      merge_into(entry, std::move(s), queue);
    while (!queue.empty()) {
      int id = *queue.begin();
      queue.erase(queue.begin());
      if (++visits[id] > options_.unroll_bound + 2)
        continue;
      PathState st = entry.at(id);
      st.dead = false;
      std::vector<PathState> out;
      step(std::move(st), out);
      for (auto &s : out)
        merge_into(entry, std::move(s), queue);
    }
  }
};

} // namespace

FunctionSummary summarize_function(const FunctionDef &fn, const Cfg &cfg,
                                   const TranslationUnit *tu,
                                   const AnalysisOptions &options) {
  CheckerConfig config = make_profile("union");
  FunctionAnalyzer a(tu, fn, cfg, config, options, Mode::Summary, nullptr,
                     nullptr);
  a.run();
  return a.summary();
}

AnalysisResult analyze_unit(const TranslationUnit &tu,
                            const std::map<std::string, Cfg> &cfgs,
                            const CheckerConfig &config,
                            const AnalysisOptions &options) {
  AnalysisResult result;
  const std::set<std::string> recursive = recursive_functions(tu);

  for (const auto &fn : tu.functions) {
    auto it = cfgs.find(fn.name);
    if (it == cfgs.end())
      continue;
    FunctionAnalyzer a(&tu, fn, it->second, config, options, Mode::Summary,
                       nullptr, nullptr);
    a.run();
    result.summaries.emplace(fn.name, a.summary());
  }

  for (const auto &fn : tu.functions) {
    auto it = cfgs.find(fn.name);
    if (it == cfgs.end())
      continue;
    FunctionAnalyzer a(&tu, fn, it->second, config, options, Mode::Check,
                       &result.summaries, &recursive);
    a.run();
    for (auto &f : a.findings())
      result.findings.push_back(std::move(f));
    result.stats.paths[fn.name] = a.paths();
    result.stats.max_back_edge_traversals =
        std::max(result.stats.max_back_edge_traversals, a.max_back_edge());
    if (a.incomplete()) {
      result.incomplete = true;
      result.warnings.push_back(
          "path budget of " + std::to_string(options.path_budget) +
          " exceeded in `" + fn.name + "`; continued with joined states");
    }
  }
  normalize_findings(result.findings);
  return result;
}

AnalysisResult analyze_text(const std::string &path, const std::string &text,
                            const CheckerConfig &config,
                            const AnalysisOptions &options) {
  auto unit = std::make_shared<const SourceUnit>(path, text);
  TranslationUnit tu = parse_source(unit);
  auto cfgs = build_cfgs(tu);
  return analyze_unit(tu, cfgs, config, options);
}

AnalysisResult analyze_file(const std::string &path,
                            const CheckerConfig &config,
                            const AnalysisOptions &options) {
  auto unit = std::make_shared<const SourceUnit>(SourceUnit::from_file(path));
  TranslationUnit tu = parse_source(unit);
  auto cfgs = build_cfgs(tu);
  return analyze_unit(tu, cfgs, config, options);
}

} // namespace memlab
