//===-- memlab/diagnostics.hpp - Report rendering --------------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_DIAGNOSTICS_HPP
#define MEMLAB_DIAGNOSTICS_HPP

#include "memlab/finding.hpp"

#include <map>
#include <string>
#include <vector>

namespace memlab {

struct Report {
  std::vector<Finding> findings;
  std::map<std::string, int> summary; // KIND token -> count
  bool incomplete = false;
  double elapsed = 0.0; // seconds, never rendered

  bool operator==(const Report &other) const {
    return findings == other.findings && summary == other.summary &&
           incomplete == other.incomplete;
  }
};

/// Sorts the findings and fills the summary.
Report make_report(std::vector<Finding> findings, bool incomplete = false);

std::string render_text(const Report &report);

/// One JSON object per line: file, line, kind, checker, message, function.
std::string emit_structured(const Report &report);

std::string to_structured_line(const Finding &finding);

} // namespace memlab

#endif // MEMLAB_DIAGNOSTICS_HPP
