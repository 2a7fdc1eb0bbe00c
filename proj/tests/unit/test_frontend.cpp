#include "oracles.hpp"

#include "memlab/lexer.hpp"
#include "memlab/parser.hpp"
#include "memlab/source.hpp"

#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace memlab;

namespace {

std::shared_ptr<const SourceUnit> unit_of(const std::string &text,
                                          const std::string &path = "t.c") {
  return std::make_shared<SourceUnit>(path, text);
}

std::shared_ptr<const SourceUnit> corpus_unit(const std::string &name) {
  return std::make_shared<SourceUnit>(
      SourceUnit::from_file(oracle::source_dir() + "/corpus/" + name));
}

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto &e :
       fs::directory_iterator(oracle::source_dir() + "/corpus"))
    if (e.path().extension() == ".c")
      out.push_back(e.path().filename().string());
  std::sort(out.begin(), out.end());
  return out;
}

// Leading lexeme required at a node's location, empty when any token will do.
std::string leading(const Expr &e) {
  if (auto *i = e.as<Ident>())
    return i->name;
  if (auto *c = e.as<Call>())
    return c->callee;
  if (e.is<Deref>())
    return "*";
  if (e.is<AddressOf>())
    return "&";
  if (e.is<UnaryNot>())
    return "!";
  if (e.is<SizeofExpr>() || e.is<SizeofType>())
    return "sizeof";
  if (e.is<NullLit>())
    return "NULL";
  return {};
}

std::string leading(const Stmt &s) {
  if (s.is<Return>())
    return "return";
  if (s.is<If>())
    return "if";
  if (s.is<While>())
    return "while";
  return {};
}

struct Walker {
  std::function<void(const Expr &)> on_expr;
  std::function<void(const Stmt &)> on_stmt;

  void expr(const Expr &e) {
    on_expr(e);
    std::visit(
        [&](const auto &n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, Deref> ||
                        std::is_same_v<T, AddressOf> ||
                        std::is_same_v<T, UnaryNot> ||
                        std::is_same_v<T, Negate> ||
                        std::is_same_v<T, SizeofExpr> ||
                        std::is_same_v<T, Cast>)
            expr(*n.operand);
          else if constexpr (std::is_same_v<T, FieldAccess>)
            expr(*n.base);
          else if constexpr (std::is_same_v<T, Call>)
            for (const auto &a : n.args)
              expr(*a);
          else if constexpr (std::is_same_v<T, BinOp>) {
            expr(*n.lhs);
            expr(*n.rhs);
          }
        },
        e.node);
  }

  void stmt(const Stmt &s) {
    on_stmt(s);
    std::visit(
        [&](const auto &n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, VarDecl>) {
            if (n.init)
              expr(*n.init);
          } else if constexpr (std::is_same_v<T, Assign>) {
            expr(*n.target);
            expr(*n.value);
          } else if constexpr (std::is_same_v<T, ExprStmt>) {
            expr(*n.expr);
          } else if constexpr (std::is_same_v<T, If>) {
            expr(*n.cond);
            stmt(*n.then_branch);
            if (n.else_branch)
              stmt(*n.else_branch);
          } else if constexpr (std::is_same_v<T, While>) {
            expr(*n.cond);
            stmt(*n.body);
          } else if constexpr (std::is_same_v<T, Return>) {
            if (n.value)
              expr(*n.value);
          } else if constexpr (std::is_same_v<T, Block>) {
            for (const auto &b : n.body)
              stmt(*b);
          }
        },
        s.node);
  }
};

std::string dump(const TranslationUnit &tu) {
  std::string out;
  for (const auto &s : tu.types)
    out += "struct " + s.name + " " + std::to_string(s.fields.size()) + "\n";
  for (const auto &fn : tu.functions) {
    out += "fn " + fn.name + " " + fn.return_type.to_string() + "\n";
    Walker w{[&](const Expr &e) {
               out += " e" + std::to_string(e.node.index()) + "@" +
                      std::to_string(e.loc.line) + ":" +
                      std::to_string(e.loc.column) + " " + to_source(e) + "\n";
             },
             [&](const Stmt &s) {
               out += " s" + std::to_string(s.node.index()) + "@" +
                      std::to_string(s.loc.line) + ":" +
                      std::to_string(s.loc.column) + "\n";
             }};
    w.stmt(*fn.body);
  }
  return out;
}

} // namespace

TEST_CASE("source unit maps offsets to lines and back") {
  SourceUnit u("a.c", "ab\ncd\n\nx");
  CHECK(u.locate(0) == SourceLoc{1, 1});
  CHECK(u.locate(4) == SourceLoc{2, 2});
  CHECK(u.locate(7) == SourceLoc{4, 1});
  for (std::size_t off = 0; off < u.text().size(); ++off)
    CHECK(u.offset_of(u.locate(off)) == off);
  CHECK(u.line(2) == "cd");
  CHECK(u.contains(SourceLoc{2, 1}));
  CHECK_FALSE(u.contains(SourceLoc{9, 1}));
}

TEST_CASE("empty input has no tokens") {
  CHECK(tokenize(SourceUnit("e.c", "")).empty());
}

TEST_CASE("simple declaration tokens") {
  const auto toks = tokenize(SourceUnit("d.c", "int x = 0;"));
  REQUIRE(toks.size() == 5);
  CHECK(toks[0].is_keyword("int"));
  CHECK(toks[1].is(TokenKind::Identifier, "x"));
  CHECK(toks[2].is_punct("="));
  CHECK(toks[3].is(TokenKind::IntLiteral, "0"));
  CHECK(toks[4].is_punct(";"));
  CHECK(toks[1].loc == SourceLoc{1, 5});
}

TEST_CASE("dead store example token count agrees with a character walk") {
  const auto unit = corpus_unit("dead_store_tp.c");
  const int walked = oracle::count_tokens_by_walk(unit->text());
  // Frozen from the character-walk count.
  CHECK(walked == 40);
  CHECK(static_cast<int>(tokenize(*unit).size()) == walked);
}

TEST_CASE("token lexemes and skipped text reconstruct the input") {
  for (const auto &name : corpus_files()) {
    CAPTURE(name);
    const auto unit = corpus_unit(name);
    const auto &text = unit->text();
    std::size_t pos = 0;
    for (const auto &t : tokenize(*unit)) {
      REQUIRE(t.offset >= pos);
      const std::string gap = text.substr(pos, t.offset - pos);
      std::string stripped;
      for (std::size_t i = 0; i < gap.size(); ++i) {
        if (gap.compare(i, 2, "/*") == 0) {
          i = gap.find("*/", i + 2) + 1;
          continue;
        }
        if (gap.compare(i, 2, "//") == 0) {
          i = gap.find('\n', i);
          continue;
        }
        if (!std::isspace(static_cast<unsigned char>(gap[i])))
          stripped += gap[i];
      }
      CHECK(stripped.empty());
      CHECK(text.compare(t.offset, t.lexeme.size(), t.lexeme) == 0);
      CHECK(unit->locate(t.offset) == t.loc);
      pos = t.offset + t.lexeme.size();
    }
  }
}

TEST_CASE("illegal character raises a located lex error") {
  try {
    tokenize(SourceUnit("bad.c", "int x;\n  @"));
    FAIL("expected LexError");
  } catch (const LexError &e) {
    CHECK(e.loc() == SourceLoc{2, 3});
  }
}

TEST_CASE("minimal main") {
  const auto tu = parse_source(unit_of("int main(){return 0;}"));
  REQUIRE(tu.functions.size() == 1);
  CHECK(tu.functions[0].name == "main");
  const auto &body = tu.functions[0].body->as<Block>()->body;
  REQUIRE(body.size() == 1);
  const auto *ret = body[0]->as<Return>();
  REQUIRE(ret);
  REQUIRE(ret->value);
  CHECK(ret->value->as<IntLit>()->value == 0);
}

TEST_CASE("dead store example statements") {
  const auto tu = parse_source(corpus_unit("dead_store_fp.c"));
  const FunctionDef *main = tu.function("main");
  REQUIRE(main);
  const auto &body = main->body->as<Block>()->body;
  REQUIRE(body.size() == 5);
  const auto *var = body[0]->as<VarDecl>();
  REQUIRE(var);
  CHECK(var->name == "var");
  CHECK(var->init->as<IntLit>()->value == 20);
  const auto *ptr = body[1]->as<VarDecl>();
  REQUIRE(ptr);
  CHECK(ptr->name == "ptr_a");
  CHECK(ptr->type.is_pointer());
  CHECK(ptr->init->is<NullLit>());
  const auto *assign = body[2]->as<Assign>();
  REQUIRE(assign);
  CHECK(assign->target->as<Ident>()->name == "ptr_a");
  CHECK(assign->value->is<AddressOf>());
  const auto *call = body[3]->as<ExprStmt>();
  REQUIRE(call);
  CHECK(call->expr->as<Call>()->callee == "printf");
  CHECK(body[4]->is<Return>());
}

TEST_CASE("sizeof over a dereferenced identifier is recorded") {
  const auto tu = parse_source(corpus_unit("leak_sizeof_deref.c"));
  REQUIRE(tu.struct_def("st"));
  REQUIRE(tu.function("create"));
  REQUIRE(tu.function("main"));
  int deref_sizeofs = 0;
  Walker w{[&](const Expr &e) {
             if (auto *s = e.as<SizeofExpr>())
               deref_sizeofs += s->deref_of_ident;
           },
           [](const Stmt &) {}};
  w.stmt(*tu.function("create")->body);
  CHECK(deref_sizeofs == 1);
}

TEST_CASE("parse errors carry a location and the expected tokens") {
  try {
    parse_source(unit_of("int main( {\n}"));
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.loc().line == 1);
    CHECK_FALSE(e.expected().empty());
  }
  CHECK_THROWS_AS(parse_source(unit_of("int main(){ int x = ; }")), ParseError);
}

TEST_CASE("unsupported constructs are rejected without crashing") {
  CHECK_THROWS_AS(
      parse_source(unit_of("int main(){ int i; for(i=0;i<3;i=i+1){} }")),
      UnsupportedConstruct);
  CHECK_THROWS_AS(
      parse_source(unit_of("int main(){ int i = 0; switch(i){} return 0; }")),
      UnsupportedConstruct);
  CHECK_THROWS_AS(parse_source(unit_of("int main(){ int i = 0; i++; }")),
                  UnsupportedConstruct);
}

TEST_CASE("every corpus file parses and node locations start at their lexeme") {
  for (const auto &name : corpus_files()) {
    CAPTURE(name);
    const auto unit = corpus_unit(name);
    TranslationUnit tu;
    REQUIRE_NOTHROW(tu = parse_source(unit));
    std::map<std::size_t, std::string> starts;
    for (const auto &t : tokenize(*unit))
      starts[t.offset] = t.lexeme;
    auto check = [&](SourceLoc loc, const std::string &lead) {
      REQUIRE(unit->contains(loc));
      auto it = starts.find(unit->offset_of(loc));
      REQUIRE(it != starts.end());
      if (!lead.empty())
        CHECK(it->second == lead);
    };
    Walker w{[&](const Expr &e) { check(e.loc, leading(e)); },
             [&](const Stmt &s) { check(s.loc, leading(s)); }};
    for (const auto &fn : tu.functions) {
      check(fn.name_loc, fn.name);
      w.stmt(*fn.body);
    }
  }
}

TEST_CASE("parsing is deterministic") {
  for (const auto &name : corpus_files()) {
    CAPTURE(name);
    const auto unit = corpus_unit(name);
    CHECK(dump(parse_source(unit)) == dump(parse_source(unit)));
  }
}

TEST_CASE("else branches, calloc and nested structs are accepted") {
  const char *text = "struct in { int v; };\n"
                     "struct out { struct in inner; int *p; };\n"
                     "int main(){\n"
                     "  struct out *o = calloc(1, sizeof(struct out));\n"
                     "  if (o == NULL) { return 1; } else { o->inner.v = 2; }\n"
                     "  free(o);\n"
                     "  return 0;\n"
                     "}\n";
  const auto tu = parse_source(unit_of(text));
  CHECK(tu.types.size() == 2);
  const auto &body = tu.function("main")->body->as<Block>()->body;
  REQUIRE(body.size() == 4);
  const auto *branch = body[1]->as<If>();
  REQUIRE(branch);
  CHECK(branch->else_branch);
}
