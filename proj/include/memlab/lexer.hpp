//===-- memlab/lexer.hpp - Tokenizer for the C subset ----------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_LEXER_HPP
#define MEMLAB_LEXER_HPP

#include "memlab/source.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace memlab {

enum class TokenKind {
  Keyword,
  Identifier,
  IntLiteral,
  CharLiteral,
  StringLiteral,
  Punct,
  Directive, // a whole preprocessor line
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t offset = 0;
  SourceLoc loc;

  bool is(TokenKind k, std::string_view text) const {
    return kind == k && lexeme == text;
  }
  bool is_punct(std::string_view text) const {
    return is(TokenKind::Punct, text);
  }
  bool is_keyword(std::string_view text) const {
    return is(TokenKind::Keyword, text);
  }
};

class LexError : public Error {
public:
  LexError(const std::string &message, SourceLoc loc);
  SourceLoc loc() const noexcept { return loc_; }

private:
  SourceLoc loc_;
};

bool is_keyword(std::string_view word);

/// Splits the unit into tokens. Whitespace and comments are dropped.
std::vector<Token> tokenize(const SourceUnit &unit);

} // namespace memlab

#endif // MEMLAB_LEXER_HPP
