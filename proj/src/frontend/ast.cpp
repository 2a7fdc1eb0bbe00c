//===-- ast.cpp - Syntax tree helpers -------------------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/ast.hpp"

#include <algorithm>

namespace memlab {

CType CType::pointee() const {
  CType out = *this;
  if (out.pointer_depth > 0)
    --out.pointer_depth;
  return out;
}

CType CType::pointer_to() const {
  CType out = *this;
  ++out.pointer_depth;
  return out;
}

std::string CType::to_string() const {
  std::string out;
  switch (base) {
  case BaseType::Int:
    out = "int";
    break;
  case BaseType::Void:
    out = "void";
    break;
  case BaseType::Char:
    out = "char";
    break;
  case BaseType::Struct:
    out = "struct " + struct_name;
    break;
  case BaseType::SizeUnknown:
    out = "size_t";
    break;
  }
  if (pointer_depth > 0)
    out += ' ' + std::string(static_cast<std::size_t>(pointer_depth), '*');
  return out;
}

std::string_view spelling(BinaryOp op) {
  switch (op) {
  case BinaryOp::Add:
    return "+";
  case BinaryOp::Sub:
    return "-";
  case BinaryOp::Mul:
    return "*";
  case BinaryOp::Div:
    return "/";
  case BinaryOp::Mod:
    return "%";
  case BinaryOp::Eq:
    return "==";
  case BinaryOp::Ne:
    return "!=";
  case BinaryOp::Lt:
    return "<";
  case BinaryOp::Gt:
    return ">";
  case BinaryOp::Le:
    return "<=";
  case BinaryOp::Ge:
    return ">=";
  case BinaryOp::And:
    return "&&";
  case BinaryOp::Or:
    return "||";
  }
  return "?";
}

const Field *StructDef::field(std::string_view name) const {
  for (const auto &f : fields)
    if (f.name == name)
      return &f;
  return nullptr;
}

const FunctionDef *TranslationUnit::function(std::string_view name) const {
  for (const auto &fn : functions)
    if (fn.name == name)
      return &fn;
  return nullptr;
}

const StructDef *TranslationUnit::struct_def(std::string_view name) const {
  for (const auto &s : types)
    if (s.name == name)
      return &s;
  return nullptr;
}

bool TranslationUnit::is_global(std::string_view name) const {
  return std::any_of(globals.begin(), globals.end(),
                     [&](const VarDecl &g) { return g.name == name; });
}

namespace {

struct Printer {
  std::string operator()(const Ident &e) const { return e.name; }
  std::string operator()(const IntLit &e) const {
    return std::to_string(e.value);
  }
  std::string operator()(const NullLit &) const { return "NULL"; }
  std::string operator()(const StringLit &e) const {
    return '"' + e.value + '"';
  }
  std::string operator()(const Deref &e) const {
    return "*" + to_source(*e.operand);
  }
  std::string operator()(const AddressOf &e) const {
    return "&" + to_source(*e.operand);
  }
  std::string operator()(const FieldAccess &e) const {
    return to_source(*e.base) + (e.via_pointer ? "->" : ".") + e.field;
  }
  std::string operator()(const Call &e) const {
    std::string out = e.callee + "(";
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      if (i)
        out += ", ";
      out += to_source(*e.args[i]);
    }
    return out + ")";
  }
  std::string operator()(const SizeofType &e) const {
    return "sizeof(" + e.type.to_string() + ")";
  }
  std::string operator()(const SizeofExpr &e) const {
    return "sizeof(" + to_source(*e.operand) + ")";
  }
  std::string operator()(const BinOp &e) const {
    return "(" + to_source(*e.lhs) + " " + std::string(spelling(e.op)) + " " +
           to_source(*e.rhs) + ")";
  }
  std::string operator()(const UnaryNot &e) const {
    return "!" + to_source(*e.operand);
  }
  std::string operator()(const Negate &e) const {
    return "-" + to_source(*e.operand);
  }
  std::string operator()(const Cast &e) const {
    return "(" + e.type.to_string() + ")" + to_source(*e.operand);
  }
};

} // namespace

std::string to_source(const Expr &expr) {
  return std::visit(Printer{}, expr.node);
}

} // namespace memlab
