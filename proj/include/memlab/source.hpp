//===-- memlab/source.hpp - Source text with a line index ------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_SOURCE_HPP
#define MEMLAB_SOURCE_HPP

#include "memlab/error.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace memlab {

class SourceUnit {
public:
  SourceUnit(std::string path, std::string text);

  /// Reads a whole file. Throws Error if it cannot be opened.
  static SourceUnit from_file(const std::filesystem::path &path);

  const std::string &path() const noexcept { return path_; }
  const std::string &text() const noexcept { return text_; }

  /// Maps a byte offset (0..size) to its line and column.
  SourceLoc locate(std::size_t offset) const;
  /// Inverse of locate for locations inside the text.
  std::size_t offset_of(SourceLoc loc) const;

  int line_count() const noexcept { return static_cast<int>(line_starts_.size()); }
  std::string_view line(int number) const;
  bool contains(SourceLoc loc) const;

private:
  std::string path_;
  std::string text_;
  std::vector<std::size_t> line_starts_;
};

} // namespace memlab

#endif // MEMLAB_SOURCE_HPP
