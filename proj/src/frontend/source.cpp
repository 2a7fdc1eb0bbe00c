//===-- source.cpp - Source text with a line index ------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/source.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace memlab {

SourceUnit::SourceUnit(std::string path, std::string text)
    : path_(std::move(path)), text_(std::move(text)) {
  line_starts_.push_back(0);
  for (std::size_t i = 0; i < text_.size(); ++i)
    if (text_[i] == '\n' && i + 1 < text_.size())
      line_starts_.push_back(i + 1);
}

SourceUnit SourceUnit::from_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return SourceUnit(path.string(), buffer.str());
}

SourceLoc SourceUnit::locate(std::size_t offset) const {
  offset = std::min(offset, text_.size());
  auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
  auto index = static_cast<std::size_t>(it - line_starts_.begin()) - 1;
  return {static_cast<int>(index) + 1,
          static_cast<int>(offset - line_starts_[index]) + 1};
}

std::size_t SourceUnit::offset_of(SourceLoc loc) const {
  if (loc.line < 1 || loc.line > line_count())
    return text_.size();
  return std::min(line_starts_[loc.line - 1] + (loc.column - 1), text_.size());
}

std::string_view SourceUnit::line(int number) const {
  if (number < 1 || number > line_count())
    return {};
  std::size_t begin = line_starts_[number - 1];
  std::size_t end = text_.find('\n', begin);
  if (end == std::string::npos)
    end = text_.size();
  return std::string_view(text_).substr(begin, end - begin);
}

bool SourceUnit::contains(SourceLoc loc) const {
  if (loc.line < 1 || loc.line > line_count() || loc.column < 1)
    return false;
  return static_cast<std::size_t>(loc.column) <= line(loc.line).size() + 1;
}

} // namespace memlab
