//===-- memlab/parser.hpp - Recursive-descent parser -----------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_PARSER_HPP
#define MEMLAB_PARSER_HPP

#include "memlab/ast.hpp"
#include "memlab/lexer.hpp"

#include <memory>
#include <span>
#include <string>
#include <vector>

namespace memlab {

class ParseError : public Error {
public:
  ParseError(const std::string &message, SourceLoc loc,
             std::vector<std::string> expected = {});
  SourceLoc loc() const noexcept { return loc_; }
  const std::vector<std::string> &expected() const noexcept {
    return expected_;
  }

private:
  SourceLoc loc_;
  std::vector<std::string> expected_;
};

/// A construct outside the supported subset (for, switch, arrays, ...).
class UnsupportedConstruct : public Error {
public:
  UnsupportedConstruct(std::string construct, SourceLoc loc);
  const std::string &construct() const noexcept { return construct_; }
  SourceLoc loc() const noexcept { return loc_; }

private:
  std::string construct_;
  SourceLoc loc_;
};

TranslationUnit parse(std::span<const Token> tokens,
                      std::shared_ptr<const SourceUnit> unit);

/// tokenize + parse.
TranslationUnit parse_source(std::shared_ptr<const SourceUnit> unit);

/// Loads and parses a file.
TranslationUnit parse_file(const std::string &path);

} // namespace memlab

#endif // MEMLAB_PARSER_HPP
