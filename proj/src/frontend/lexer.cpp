//===-- lexer.cpp - Tokenizer for the C subset ----------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/lexer.hpp"

#include <array>
#include <cctype>

namespace memlab {

namespace {

constexpr std::array<std::string_view, 32> Keywords = {
    "int",    "char",     "void",   "long",    "short",  "unsigned",
    "signed", "const",    "static", "extern",  "struct", "typedef",
    "if",     "else",     "while",  "return",  "sizeof", "for",
    "do",     "switch",   "case",   "default", "break",  "continue",
    "goto",   "enum",     "union",  "float",   "double", "volatile",
    "inline", "register"};

constexpr std::array<std::string_view, 4> ThreeCharPuncts = {"<<=", ">>=",
                                                             "...", "->*"};
constexpr std::array<std::string_view, 19> TwoCharPuncts = {
    "->", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=",
    "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>"};
constexpr std::string_view OneCharPuncts = "{}()[];,.=+-*/%<>!&|^~?:";

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
public:
  explicit Lexer(const SourceUnit &unit) : unit_(unit), text_(unit.text()) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    bool line_start = true;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '\n') {
        line_start = true;
        ++pos_;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        ++pos_;
        continue;
      }
      if (starts("//")) {
        while (pos_ < text_.size() && text_[pos_] != '\n')
          ++pos_;
        continue;
      }
      if (starts("/*")) {
        std::size_t close = text_.find("*/", pos_ + 2);
        if (close == std::string::npos)
          throw LexError("unterminated comment", unit_.locate(pos_));
        pos_ = close + 2;
        continue;
      }
      std::size_t begin = pos_;
      if (c == '#' && line_start) {
        lex_directive();
        out.push_back(make(TokenKind::Directive, begin));
        continue;
      }
      line_start = false;
      if (ident_start(c)) {
        while (pos_ < text_.size() && ident_char(text_[pos_]))
          ++pos_;
        std::string_view word(text_.data() + begin, pos_ - begin);
        out.push_back(make(
            is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier,
            begin));
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        lex_number();
        out.push_back(make(TokenKind::IntLiteral, begin));
        continue;
      }
      if (c == '"') {
        lex_quoted('"', "string literal");
        out.push_back(make(TokenKind::StringLiteral, begin));
        continue;
      }
      if (c == '\'') {
        lex_quoted('\'', "character literal");
        out.push_back(make(TokenKind::CharLiteral, begin));
        continue;
      }
      if (lex_punct()) {
        out.push_back(make(TokenKind::Punct, begin));
        continue;
      }
      std::string shown = static_cast<unsigned char>(c) < 0x80
                              ? std::string("'") + c + "'"
                              : std::string("non-ASCII byte");
      throw LexError("illegal character " + shown, unit_.locate(pos_));
    }
    return out;
  }

private:
  bool starts(std::string_view s) const {
    return text_.compare(pos_, s.size(), s) == 0;
  }

  Token make(TokenKind kind, std::size_t begin) const {
    return Token{kind, text_.substr(begin, pos_ - begin), begin,
                 unit_.locate(begin)};
  }

  void lex_directive() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '\\' && pos_ + 1 < text_.size() &&
          text_[pos_ + 1] == '\n') {
        pos_ += 2;
        continue;
      }
      if (text_[pos_] == '\n')
        break;
      ++pos_;
    }
    while (pos_ > 0 && (text_[pos_ - 1] == '\r' || text_[pos_ - 1] == ' ' ||
                        text_[pos_ - 1] == '\t'))
      --pos_;
  }

  void lex_number() {
    std::size_t begin = pos_;
    if (starts("0x") || starts("0X")) {
      pos_ += 2;
      while (pos_ < text_.size() &&
             std::isxdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
    } else {
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
    }
    if (pos_ < text_.size() &&
        (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
      throw LexError("floating-point literals are not supported",
                     unit_.locate(begin));
    while (pos_ < text_.size() &&
           (text_[pos_] == 'u' || text_[pos_] == 'U' || text_[pos_] == 'l' ||
            text_[pos_] == 'L'))
      ++pos_;
    if (pos_ < text_.size() && ident_char(text_[pos_]))
      throw LexError("malformed integer literal", unit_.locate(begin));
  }

  void lex_quoted(char quote, const char *what) {
    std::size_t begin = pos_++;
    while (pos_ < text_.size() && text_[pos_] != quote) {
      if (text_[pos_] == '\n')
        break;
      if (text_[pos_] == '\\')
        ++pos_;
      ++pos_;
    }
    if (pos_ >= text_.size() || text_[pos_] != quote)
      throw LexError(std::string("unterminated ") + what, unit_.locate(begin));
    ++pos_;
  }

  bool lex_punct() {
    for (auto p : ThreeCharPuncts)
      if (starts(p)) {
        pos_ += 3;
        return true;
      }
    for (auto p : TwoCharPuncts)
      if (starts(p)) {
        pos_ += 2;
        return true;
      }
    if (OneCharPuncts.find(text_[pos_]) != std::string_view::npos) {
      ++pos_;
      return true;
    }
    return false;
  }

  const SourceUnit &unit_;
  const std::string &text_;
  std::size_t pos_ = 0;
};

} // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
  case TokenKind::Keyword:
    return "keyword";
  case TokenKind::Identifier:
    return "identifier";
  case TokenKind::IntLiteral:
    return "integer literal";
  case TokenKind::CharLiteral:
    return "character literal";
  case TokenKind::StringLiteral:
    return "string literal";
  case TokenKind::Punct:
    return "punctuator";
  case TokenKind::Directive:
    return "directive";
  }
  return "token";
}

LexError::LexError(const std::string &message, SourceLoc loc)
    : Error(std::to_string(loc.line) + ":" + std::to_string(loc.column) +
            ": " + message),
      loc_(loc) {}

bool is_keyword(std::string_view word) {
  for (auto k : Keywords)
    if (k == word)
      return true;
  return false;
}

std::vector<Token> tokenize(const SourceUnit &unit) {
  return Lexer(unit).run();
}

} // namespace memlab
