//===-- parser.cpp - Recursive-descent parser for the C subset ------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/parser.hpp"

#include <map>
#include <set>

namespace memlab {

namespace {

std::string join_expected(const std::vector<std::string> &expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i)
      out += ", ";
    out += expected[i];
  }
  return out;
}

constexpr std::string_view Qualifiers[] = {"const", "static", "extern",
                                           "volatile", "inline", "register"};
constexpr std::string_view IntegerWords[] = {"int",      "long",   "short",
                                             "unsigned", "signed", "char"};

bool is_qualifier(const Token &t) {
  if (t.kind != TokenKind::Keyword)
    return false;
  for (auto q : Qualifiers)
    if (t.lexeme == q)
      return true;
  return false;
}

bool is_integer_word(const Token &t) {
  if (t.kind != TokenKind::Keyword)
    return false;
  for (auto w : IntegerWords)
    if (t.lexeme == w)
      return true;
  return false;
}

bool is_lvalue(const Expr &e) {
  return e.is<Ident>() || e.is<Deref>() || e.is<FieldAccess>();
}

template <typename T> ExprPtr make_expr(SourceLoc loc, T node) {
  auto e = std::make_unique<Expr>();
  e->loc = loc;
  e->node = std::move(node);
  return e;
}

template <typename T> StmtPtr make_stmt(SourceLoc loc, T node) {
  auto s = std::make_unique<Stmt>();
  s->loc = loc;
  s->node = std::move(node);
  return s;
}

class Parser {
public:
  Parser(std::span<const Token> tokens, std::shared_ptr<const SourceUnit> unit)
      : toks_(tokens), unit_(std::move(unit)) {}

  TranslationUnit run() {
    tu_.unit = unit_;
    while (!at_end()) {
      const Token &t = peek();
      if (t.kind == TokenKind::Directive) {
        advance();
        continue;
      }
      if (t.is_punct(";")) {
        advance();
        continue;
      }
      if (t.is_keyword("typedef")) {
        parse_typedef();
        continue;
      }
      if (starts_type())
        parse_external_declaration();
      else
        fail("expected a declaration", {"type name", "typedef"});
    }
    resolve_types();
    return std::move(tu_);
  }

private:
  // -- token cursor -------------------------------------------------------

  bool at_end(std::size_t k = 0) const { return pos_ + k >= toks_.size(); }

  const Token &peek(std::size_t k = 0) const {
    static const Token End{TokenKind::Punct, "<end of input>", 0, {}};
    return at_end(k) ? End : toks_[pos_ + k];
  }

  SourceLoc here() const {
    if (!at_end())
      return peek().loc;
    return unit_->locate(unit_->text().size());
  }

  const Token &advance() {
    const Token &t = peek();
    if (!at_end())
      ++pos_;
    return t;
  }

  bool at_punct(std::string_view p, std::size_t k = 0) const {
    return !at_end(k) && peek(k).is_punct(p);
  }
  bool at_keyword(std::string_view w, std::size_t k = 0) const {
    return !at_end(k) && peek(k).is_keyword(w);
  }

  bool accept_punct(std::string_view p) {
    if (!at_punct(p))
      return false;
    advance();
    return true;
  }

  const Token &expect_punct(std::string_view p) {
    if (!at_punct(p))
      fail("expected '" + std::string(p) + "'", {std::string(p)});
    return advance();
  }

  const Token &expect_ident() {
    if (at_end() || peek().kind != TokenKind::Identifier)
      fail("expected an identifier", {"identifier"});
    return advance();
  }

  [[noreturn]] void fail(const std::string &message,
                         std::vector<std::string> expected) const {
    std::string found = at_end() ? "end of input" : "'" + peek().lexeme + "'";
    std::string text = message + ", found " + found;
    if (!expected.empty())
      text += " (expected " + join_expected(expected) + ")";
    throw ParseError(text, here(), std::move(expected));
  }

  [[noreturn]] void unsupported(const std::string &what, SourceLoc loc) const {
    throw UnsupportedConstruct(what, loc);
  }

  // -- types ----------------------------------------------------------------

  bool starts_type(std::size_t k = 0) const {
    if (at_end(k))
      return false;
    const Token &t = peek(k);
    if (t.kind == TokenKind::Keyword) {
      static const std::set<std::string_view> Starters = {
          "int",    "char",   "void",  "long",     "short",  "unsigned",
          "signed", "const",  "static", "extern",  "struct", "volatile",
          "inline", "register", "enum", "union",   "float",  "double"};
      return Starters.count(t.lexeme) != 0;
    }
    if (t.kind == TokenKind::Identifier)
      return typedefs_.count(t.lexeme) != 0 || t.lexeme == "size_t";
    return false;
  }

  CType parse_type_specifier() {
    while (!at_end() && is_qualifier(peek()))
      advance();
    if (at_end())
      fail("expected a type", {"type name"});
    const Token &t = peek();
    CType type;
    if (t.is_keyword("struct")) {
      type = parse_struct_specifier();
    } else if (t.is_keyword("enum") || t.is_keyword("union") ||
               t.is_keyword("float") || t.is_keyword("double")) {
      unsupported(t.lexeme, t.loc);
    } else if (t.is_keyword("void")) {
      advance();
      type.base = BaseType::Void;
    } else if (is_integer_word(t)) {
      bool is_char = false;
      while (!at_end() && (is_integer_word(peek()) || is_qualifier(peek()))) {
        if (peek().is_keyword("char"))
          is_char = true;
        advance();
      }
      type.base = is_char ? BaseType::Char : BaseType::Int;
    } else if (t.kind == TokenKind::Identifier && typedefs_.count(t.lexeme)) {
      type = typedefs_.at(t.lexeme);
      advance();
    } else if (t.kind == TokenKind::Identifier && t.lexeme == "size_t") {
      advance();
      type.base = BaseType::SizeUnknown;
    } else {
      fail("expected a type", {"type name"});
    }
    while (!at_end() && is_qualifier(peek()))
      advance();
    return type;
  }

  CType parse_struct_specifier() {
    SourceLoc loc = advance().loc; // 'struct'
    std::string tag;
    if (!at_end() && peek().kind == TokenKind::Identifier)
      tag = advance().lexeme;
    if (at_punct("{")) {
      if (tag.empty())
        tag = "<anonymous#" + std::to_string(++anonymous_) + ">";
      parse_struct_body(tag, loc);
    } else if (tag.empty()) {
      fail("expected a struct tag or body", {"identifier", "{"});
    }
    CType type;
    type.base = BaseType::Struct;
    type.struct_name = tag;
    return type;
  }

  void parse_struct_body(const std::string &tag, SourceLoc loc) {
    expect_punct("{");
    StructDef def;
    def.name = tag;
    def.loc = loc;
    while (!at_punct("}")) {
      if (at_end())
        fail("unterminated struct body", {"}"});
      CType base = parse_type_specifier();
      for (;;) {
        CType type = base;
        type.pointer_depth += parse_pointers();
        if (at_punct("("))
          unsupported("function pointer field", here());
        const Token &name = expect_ident();
        if (at_punct("["))
          unsupported("array field", here());
        if (def.field(name.lexeme))
          throw ParseError("duplicate field '" + name.lexeme + "'", name.loc);
        def.fields.push_back({name.lexeme, type});
        if (accept_punct(","))
          continue;
        expect_punct(";");
        break;
      }
    }
    expect_punct("}");
    if (tu_.struct_def(tag))
      throw ParseError("redefinition of struct '" + tag + "'", loc);
    tu_.types.push_back(std::move(def));
  }

  int parse_pointers() {
    int depth = 0;
    while (at_punct("*")) {
      advance();
      ++depth;
      while (!at_end() && is_qualifier(peek()))
        advance();
    }
    return depth;
  }

  // -- top level ----------------------------------------------------------

  void parse_typedef() {
    advance(); // 'typedef'
    CType base = parse_type_specifier();
    for (;;) {
      CType type = base;
      type.pointer_depth += parse_pointers();
      if (at_punct("("))
        unsupported("function pointer typedef", here());
      const Token &name = expect_ident();
      if (at_punct("["))
        unsupported("array typedef", here());
      typedefs_[name.lexeme] = type;
      if (accept_punct(","))
        continue;
      expect_punct(";");
      return;
    }
  }

  void parse_external_declaration() {
    SourceLoc start = here();
    CType base = parse_type_specifier();
    if (accept_punct(";"))
      return; // bare struct declaration
    for (;;) {
      CType type = base;
      type.pointer_depth += parse_pointers();
      if (at_punct("("))
        unsupported("function pointer declaration", here());
      const Token &name = expect_ident();
      if (at_punct("(")) {
        parse_function(start, type, name);
        return;
      }
      if (at_punct("["))
        unsupported("array declaration", here());
      VarDecl decl;
      decl.name = name.lexeme;
      decl.type = type;
      decl.name_loc = name.loc;
      if (accept_punct("="))
        decl.init = parse_expr();
      if (tu_.is_global(decl.name))
        throw ParseError("redefinition of '" + decl.name + "'", name.loc);
      tu_.globals.push_back(std::move(decl));
      if (accept_punct(","))
        continue;
      expect_punct(";");
      return;
    }
  }

  void parse_function(SourceLoc start, CType return_type, const Token &name) {
    FunctionDef fn;
    fn.name = name.lexeme;
    fn.return_type = return_type;
    fn.loc = start;
    fn.name_loc = name.loc;
    fn.params = parse_params();
    if (accept_punct(";")) {
      tu_.prototypes.push_back(fn.name);
      return;
    }
    if (!at_punct("{"))
      fail("expected function body", {"{", ";"});
    if (tu_.function(fn.name))
      throw ParseError("redefinition of function '" + fn.name + "'", name.loc);
    fn.body = parse_block(&fn.end_loc);
    tu_.functions.push_back(std::move(fn));
  }

  std::vector<Param> parse_params() {
    expect_punct("(");
    std::vector<Param> params;
    if (accept_punct(")"))
      return params;
    if (at_keyword("void") && at_punct(")", 1)) {
      advance();
      advance();
      return params;
    }
    for (;;) {
      if (at_punct("..."))
        unsupported("variadic parameter list", here());
      Param p;
      p.loc = here();
      p.type = parse_type_specifier();
      p.type.pointer_depth += parse_pointers();
      if (!at_end() && peek().kind == TokenKind::Identifier) {
        p.loc = peek().loc;
        p.name = advance().lexeme;
      }
      if (at_punct("["))
        unsupported("array parameter", here());
      params.push_back(std::move(p));
      if (accept_punct(","))
        continue;
      expect_punct(")");
      return params;
    }
  }

  // -- statements ---------------------------------------------------------

  StmtPtr parse_block(SourceLoc *closing = nullptr) {
    SourceLoc loc = expect_punct("{").loc;
    Block block;
    while (!at_punct("}")) {
      if (at_end())
        fail("unterminated block", {"}"});
      parse_block_item(block.body);
    }
    SourceLoc end = advance().loc;
    if (closing)
      *closing = end;
    return make_stmt(loc, std::move(block));
  }

  void parse_block_item(std::vector<StmtPtr> &out) {
    if (starts_type()) {
      parse_local_declaration(out);
      return;
    }
    out.push_back(parse_statement());
  }

  void parse_local_declaration(std::vector<StmtPtr> &out) {
    SourceLoc start = here();
    CType base = parse_type_specifier();
    if (accept_punct(";"))
      return;
    for (;;) {
      CType type = base;
      type.pointer_depth += parse_pointers();
      if (at_punct("("))
        unsupported("function pointer declaration", here());
      const Token &name = expect_ident();
      if (at_punct("["))
        unsupported("array declaration", here());
      if (at_punct("("))
        unsupported("local function declaration", here());
      VarDecl decl;
      decl.name = name.lexeme;
      decl.type = type;
      decl.name_loc = name.loc;
      if (accept_punct("="))
        decl.init = parse_expr();
      out.push_back(make_stmt(start, std::move(decl)));
      if (accept_punct(","))
        continue;
      expect_punct(";");
      return;
    }
  }

  StmtPtr parse_substatement() {
    if (starts_type()) {
      SourceLoc loc = here();
      Block block;
      parse_local_declaration(block.body);
      return make_stmt(loc, std::move(block));
    }
    return parse_statement();
  }

  StmtPtr parse_statement() {
    const Token &t = peek();
    SourceLoc loc = t.loc;
    if (t.is_punct("{"))
      return parse_block();
    if (t.is_punct(";")) {
      advance();
      return make_stmt(loc, Block{});
    }
    if (t.kind == TokenKind::Keyword) {
      if (t.lexeme == "if") {
        advance();
        expect_punct("(");
        If node;
        node.cond = parse_expr();
        expect_punct(")");
        node.then_branch = parse_substatement();
        if (at_keyword("else")) {
          advance();
          node.else_branch = parse_substatement();
        }
        return make_stmt(loc, std::move(node));
      }
      if (t.lexeme == "while") {
        advance();
        expect_punct("(");
        While node;
        node.cond = parse_expr();
        expect_punct(")");
        node.body = parse_substatement();
        return make_stmt(loc, std::move(node));
      }
      if (t.lexeme == "return") {
        advance();
        Return node;
        if (!at_punct(";"))
          node.value = parse_expr();
        expect_punct(";");
        return make_stmt(loc, std::move(node));
      }
      static const std::set<std::string_view> Unsupported = {
          "for",   "do",       "switch", "case", "default",
          "break", "continue", "goto"};
      if (Unsupported.count(t.lexeme))
        unsupported("'" + t.lexeme + "' statement", loc);
      if (t.lexeme != "sizeof")
        fail("unexpected keyword", {"statement"});
    }
    ExprPtr lhs = parse_expr();
    if (at_punct("=")) {
      advance();
      if (!is_lvalue(*lhs))
        throw ParseError("expression is not assignable", lhs->loc);
      Assign node;
      node.target = std::move(lhs);
      node.value = parse_expr();
      expect_punct(";");
      return make_stmt(loc, std::move(node));
    }
    static const std::set<std::string_view> CompoundAssign = {
        "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>="};
    if (!at_end() && peek().kind == TokenKind::Punct &&
        CompoundAssign.count(peek().lexeme))
      unsupported("compound assignment '" + peek().lexeme + "'", peek().loc);
    if (at_punct("++") || at_punct("--"))
      unsupported("increment/decrement", peek().loc);
    expect_punct(";");
    return make_stmt(loc, ExprStmt{std::move(lhs)});
  }

  // -- expressions --------------------------------------------------------

  ExprPtr parse_expr() {
    ExprPtr e = parse_binary(0);
    reject_unsupported_operator();
    return e;
  }

  void reject_unsupported_operator() const {
    static const std::set<std::string_view> Ops = {"&", "|", "^",
                                                   "<<", ">>", "?"};
    if (!at_end() && peek().kind == TokenKind::Punct &&
        Ops.count(peek().lexeme))
      unsupported("operator '" + peek().lexeme + "'", peek().loc);
  }

  static int precedence(const Token &t, BinaryOp &op) {
    if (t.kind != TokenKind::Punct)
      return -1;
    static const std::map<std::string_view, std::pair<int, BinaryOp>> Table = {
        {"||", {0, BinaryOp::Or}}, {"&&", {1, BinaryOp::And}},
        {"==", {2, BinaryOp::Eq}}, {"!=", {2, BinaryOp::Ne}},
        {"<", {3, BinaryOp::Lt}},  {">", {3, BinaryOp::Gt}},
        {"<=", {3, BinaryOp::Le}}, {">=", {3, BinaryOp::Ge}},
        {"+", {4, BinaryOp::Add}}, {"-", {4, BinaryOp::Sub}},
        {"*", {5, BinaryOp::Mul}}, {"/", {5, BinaryOp::Div}},
        {"%", {5, BinaryOp::Mod}}};
    auto it = Table.find(t.lexeme);
    if (it == Table.end())
      return -1;
    op = it->second.second;
    return it->second.first;
  }

  ExprPtr parse_binary(int min_prec) {
    ExprPtr lhs = parse_unary();
    for (;;) {
      BinaryOp op{};
      int prec = at_end() ? -1 : precedence(peek(), op);
      if (prec < min_prec)
        return lhs;
      advance();
      ExprPtr rhs = parse_binary(prec + 1);
      SourceLoc loc = lhs->loc;
      lhs = make_expr(loc, BinOp{op, std::move(lhs), std::move(rhs)});
    }
  }

  ExprPtr parse_unary() {
    if (at_end())
      fail("expected an expression", {"expression"});
    const Token &t = peek();
    SourceLoc loc = t.loc;
    if (t.kind == TokenKind::Punct) {
      if (t.lexeme == "!") {
        advance();
        return make_expr(loc, UnaryNot{parse_unary()});
      }
      if (t.lexeme == "-") {
        advance();
        return make_expr(loc, Negate{parse_unary()});
      }
      if (t.lexeme == "+") {
        advance();
        return parse_unary();
      }
      if (t.lexeme == "*") {
        advance();
        return make_expr(loc, Deref{parse_unary()});
      }
      if (t.lexeme == "&") {
        advance();
        ExprPtr operand = parse_unary();
        if (!is_lvalue(*operand))
          throw ParseError("cannot take the address of this expression",
                           operand->loc);
        return make_expr(loc, AddressOf{std::move(operand)});
      }
      if (t.lexeme == "~")
        unsupported("operator '~'", loc);
      if (t.lexeme == "++" || t.lexeme == "--")
        unsupported("increment/decrement", loc);
      if (t.lexeme == "(" && starts_type(1)) {
        advance();
        CType type = parse_type_specifier();
        type.pointer_depth += parse_pointers();
        expect_punct(")");
        if (!type.is_pointer())
          unsupported("non-pointer cast to '" + type.to_string() + "'", loc);
        return make_expr(loc, Cast{type, parse_unary()});
      }
    }
    if (t.is_keyword("sizeof")) {
      advance();
      if (at_punct("(") && starts_type(1)) {
        advance();
        CType type = parse_type_specifier();
        type.pointer_depth += parse_pointers();
        expect_punct(")");
        return make_expr(loc, SizeofType{type});
      }
      ExprPtr operand = parse_unary();
      bool deref_ident = false;
      if (const auto *d = operand->as<Deref>())
        deref_ident = d->operand->is<Ident>();
      return make_expr(loc, SizeofExpr{std::move(operand), deref_ident});
    }
    return parse_postfix();
  }

  ExprPtr parse_postfix() {
    ExprPtr e = parse_primary();
    for (;;) {
      if (at_punct(".") || at_punct("->")) {
        bool arrow = advance().lexeme == "->";
        const Token &field = expect_ident();
        SourceLoc loc = e->loc;
        e = make_expr(loc, FieldAccess{std::move(e), field.lexeme, arrow});
        continue;
      }
      if (at_punct("(")) {
        const auto *callee = e->as<Ident>();
        if (!callee)
          unsupported("call through an expression", peek().loc);
        advance();
        Call call;
        call.callee = callee->name;
        if (!at_punct(")")) {
          for (;;) {
            call.args.push_back(parse_expr());
            if (!accept_punct(","))
              break;
          }
        }
        expect_punct(")");
        SourceLoc loc = e->loc;
        e = make_expr(loc, std::move(call));
        continue;
      }
      if (at_punct("["))
        unsupported("array subscript", peek().loc);
      if (at_punct("++") || at_punct("--"))
        unsupported("increment/decrement", peek().loc);
      return e;
    }
  }

  ExprPtr parse_primary() {
    if (at_end())
      fail("expected an expression", {"expression"});
    const Token &t = peek();
    SourceLoc loc = t.loc;
    switch (t.kind) {
    case TokenKind::Identifier:
      advance();
      if (t.lexeme == "NULL")
        return make_expr(loc, NullLit{});
      return make_expr(loc, Ident{t.lexeme});
    case TokenKind::IntLiteral:
      advance();
      return make_expr(loc, IntLit{int_value(t)});
    case TokenKind::CharLiteral:
      advance();
      return make_expr(loc, IntLit{char_value(t)});
    case TokenKind::StringLiteral: {
      std::string value;
      while (!at_end() && peek().kind == TokenKind::StringLiteral) {
        const std::string &lex = advance().lexeme;
        value += lex.substr(1, lex.size() - 2);
      }
      return make_expr(loc, StringLit{value});
    }
    case TokenKind::Punct:
      if (t.lexeme == "(") {
        advance();
        ExprPtr inner = parse_expr();
        expect_punct(")");
        return inner;
      }
      break;
    default:
      break;
    }
    fail("expected an expression", {"expression"});
  }

  static std::int64_t int_value(const Token &t) {
    std::string digits = t.lexeme;
    while (!digits.empty() &&
           std::string_view("uUlL").find(digits.back()) != std::string::npos)
      digits.pop_back();
    try {
      return static_cast<std::int64_t>(std::stoull(digits, nullptr, 0));
    } catch (const std::exception &) {
      throw ParseError("integer literal out of range", t.loc);
    }
  }

  static std::int64_t char_value(const Token &t) {
    const std::string &lex = t.lexeme;
    if (lex.size() < 3)
      throw ParseError("empty character literal", t.loc);
    if (lex[1] != '\\')
      return static_cast<unsigned char>(lex[1]);
    switch (lex[2]) {
    case 'n':
      return '\n';
    case 't':
      return '\t';
    case 'r':
      return '\r';
    case '0':
      return 0;
    default:
      return static_cast<unsigned char>(lex[2]);
    }
  }

  // -- struct resolution --------------------------------------------------

  void resolve(CType &type) const {
    if (type.base == BaseType::Struct)
      type.unresolved = tu_.struct_def(type.struct_name) == nullptr;
  }

  void resolve(Expr &e) {
    std::visit(
        [&](auto &node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, Deref> ||
                        std::is_same_v<T, AddressOf> ||
                        std::is_same_v<T, UnaryNot> ||
                        std::is_same_v<T, Negate>) {
            resolve(*node.operand);
          } else if constexpr (std::is_same_v<T, FieldAccess>) {
            resolve(*node.base);
          } else if constexpr (std::is_same_v<T, Call>) {
            for (auto &a : node.args)
              resolve(*a);
          } else if constexpr (std::is_same_v<T, SizeofType>) {
            resolve(node.type);
          } else if constexpr (std::is_same_v<T, SizeofExpr>) {
            resolve(*node.operand);
          } else if constexpr (std::is_same_v<T, BinOp>) {
            resolve(*node.lhs);
            resolve(*node.rhs);
          } else if constexpr (std::is_same_v<T, Cast>) {
            resolve(node.type);
            resolve(*node.operand);
          }
        },
        e.node);
  }

  void resolve(Stmt &s) {
    std::visit(
        [&](auto &node) {
          using T = std::decay_t<decltype(node)>;
          if constexpr (std::is_same_v<T, VarDecl>) {
            resolve(node.type);
            if (node.init)
              resolve(*node.init);
          } else if constexpr (std::is_same_v<T, Assign>) {
            resolve(*node.target);
            resolve(*node.value);
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            resolve(*node.expr);
          } else if constexpr (std::is_same_v<T, If>) {
            resolve(*node.cond);
            resolve(*node.then_branch);
            if (node.else_branch)
              resolve(*node.else_branch);
          } else if constexpr (std::is_same_v<T, While>) {
            resolve(*node.cond);
            resolve(*node.body);
          } else if constexpr (std::is_same_v<T, Return>) {
            if (node.value)
              resolve(*node.value);
          } else if constexpr (std::is_same_v<T, Block>) {
            for (auto &child : node.body)
              resolve(*child);
          }
        },
        s.node);
  }

  void resolve_types() {
    for (auto &def : tu_.types)
      for (auto &field : def.fields)
        resolve(field.type);
    for (auto &g : tu_.globals) {
      resolve(g.type);
      if (g.init)
        resolve(*g.init);
    }
    for (auto &fn : tu_.functions) {
      resolve(fn.return_type);
      for (auto &p : fn.params)
        resolve(p.type);
      resolve(*fn.body);
    }
  }

  std::span<const Token> toks_;
  std::shared_ptr<const SourceUnit> unit_;
  std::size_t pos_ = 0;
  int anonymous_ = 0;
  std::map<std::string, CType> typedefs_;
  TranslationUnit tu_;
};

} // namespace

ParseError::ParseError(const std::string &message, SourceLoc loc,
                       std::vector<std::string> expected)
    : Error(std::to_string(loc.line) + ":" + std::to_string(loc.column) +
            ": " + message),
      loc_(loc), expected_(std::move(expected)) {}

UnsupportedConstruct::UnsupportedConstruct(std::string construct,
                                           SourceLoc loc)
    : Error(std::to_string(loc.line) + ":" + std::to_string(loc.column) +
            ": unsupported construct: " + construct),
      construct_(std::move(construct)), loc_(loc) {}

TranslationUnit parse(std::span<const Token> tokens,
                      std::shared_ptr<const SourceUnit> unit) {
  return Parser(tokens, std::move(unit)).run();
}

TranslationUnit parse_source(std::shared_ptr<const SourceUnit> unit) {
  std::vector<Token> tokens = tokenize(*unit);
  return parse(tokens, std::move(unit));
}

TranslationUnit parse_file(const std::string &path) {
  return parse_source(
      std::make_shared<const SourceUnit>(SourceUnit::from_file(path)));
}

} // namespace memlab
