//===-- memlab/error.hpp - Error base and source locations -----*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_ERROR_HPP
#define MEMLAB_ERROR_HPP

#include <compare>
#include <stdexcept>
#include <string>

namespace memlab {

/// 1-based line and column. A zero line means "no location".
struct SourceLoc {
  int line = 0;
  int column = 0;

  auto operator<=>(const SourceLoc &) const = default;
};

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace memlab

#endif // MEMLAB_ERROR_HPP
