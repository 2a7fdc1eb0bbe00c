//===-- memlab/ast.hpp - Syntax tree for the C subset ----------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_AST_HPP
#define MEMLAB_AST_HPP

#include "memlab/source.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace memlab {

enum class BaseType { Int, Void, Char, Struct, SizeUnknown };

/// A base type plus a pointer depth. `st **` is {Struct "st", 2}.
struct CType {
  BaseType base = BaseType::Int;
  std::string struct_name;
  int pointer_depth = 0;
  bool unresolved = false; // Struct naming no known definition

  bool is_pointer() const noexcept { return pointer_depth > 0; }
  CType pointee() const;
  CType pointer_to() const;
  std::string to_string() const;

  bool operator==(const CType &) const = default;
};

struct Expr;
struct Stmt;
using ExprPtr = std::unique_ptr<Expr>;
using StmtPtr = std::unique_ptr<Stmt>;

enum class BinaryOp { Add, Sub, Mul, Div, Mod, Eq, Ne, Lt, Gt, Le, Ge, And, Or };

std::string_view spelling(BinaryOp op);

struct Ident {
  std::string name;
};
struct IntLit {
  std::int64_t value = 0;
};
struct NullLit {};
struct StringLit {
  std::string value;
};
struct Deref {
  ExprPtr operand;
};
struct AddressOf {
  ExprPtr operand;
};
struct FieldAccess {
  ExprPtr base;
  std::string field;
  bool via_pointer = false;
};
struct Call {
  std::string callee;
  std::vector<ExprPtr> args;
};
struct SizeofType {
  CType type;
};
struct SizeofExpr {
  ExprPtr operand;
  bool deref_of_ident = false; // operand is `*identifier`
};
struct BinOp {
  BinaryOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct UnaryNot {
  ExprPtr operand;
};
struct Negate {
  ExprPtr operand;
};
struct Cast {
  CType type;
  ExprPtr operand;
};

struct Expr {
  SourceLoc loc;
  std::variant<Ident, IntLit, NullLit, StringLit, Deref, AddressOf,
               FieldAccess, Call, SizeofType, SizeofExpr, BinOp, UnaryNot,
               Negate, Cast>
      node;

  template <typename T> const T *as() const { return std::get_if<T>(&node); }
  template <typename T> bool is() const {
    return std::holds_alternative<T>(node);
  }
};

struct VarDecl {
  std::string name;
  CType type;
  ExprPtr init;
  SourceLoc name_loc;
};
struct Assign {
  ExprPtr target;
  ExprPtr value;
};
struct ExprStmt {
  ExprPtr expr;
};
struct If {
  ExprPtr cond;
  StmtPtr then_branch;
  StmtPtr else_branch;
};
struct While {
  ExprPtr cond;
  StmtPtr body;
};
struct Return {
  ExprPtr value;
};
struct Block {
  std::vector<StmtPtr> body;
};

struct Stmt {
  SourceLoc loc;
  std::variant<VarDecl, Assign, ExprStmt, If, While, Return, Block> node;

  template <typename T> const T *as() const { return std::get_if<T>(&node); }
  template <typename T> bool is() const {
    return std::holds_alternative<T>(node);
  }
};

struct Param {
  std::string name; // empty for unnamed prototype parameters
  CType type;
  SourceLoc loc;
};

struct FunctionDef {
  std::string name;
  CType return_type;
  std::vector<Param> params;
  StmtPtr body; // always a Block
  SourceLoc loc;
  SourceLoc name_loc;
  SourceLoc end_loc; // closing brace
};

struct Field {
  std::string name;
  CType type;
};

struct StructDef {
  std::string name;
  std::vector<Field> fields;
  SourceLoc loc;

  const Field *field(std::string_view name) const;
};

struct TranslationUnit {
  std::shared_ptr<const SourceUnit> unit;
  std::vector<StructDef> types;
  std::vector<FunctionDef> functions;
  std::vector<VarDecl> globals;
  std::vector<std::string> prototypes; // declared without a body

  const FunctionDef *function(std::string_view name) const;
  const StructDef *struct_def(std::string_view name) const;
  bool is_global(std::string_view name) const;
};

/// Prints an expression back as compact C text.
std::string to_source(const Expr &expr);

} // namespace memlab

#endif // MEMLAB_AST_HPP
