//===-- memlab/ingest.hpp - External report parsers ------------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_INGEST_HPP
#define MEMLAB_INGEST_HPP

#include "memlab/error.hpp"
#include "memlab/finding.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace memlab {

class FormatError : public Error {
public:
  /// `line` is the 1-based line of the offending report text.
  FormatError(const std::string &message, int line);
  int line() const noexcept { return line_; }

private:
  int line_;
};

enum class ReportFormat { Infer, Cppcheck, Predator, Memlab };

std::string_view to_string(ReportFormat format);
std::optional<ReportFormat> format_from_name(std::string_view name);

struct ExternalReport {
  ReportFormat tool = ReportFormat::Memlab;
  std::string raw;
  std::vector<Finding> findings;
};

std::vector<Finding> parse_infer_report(std::string_view text);
std::vector<Finding> parse_cppcheck_report(std::string_view text);
std::vector<Finding> parse_predator_report(std::string_view text);
/// Reads the records written by emit_structured.
std::vector<Finding> parse_structured_findings(std::string_view text);

ExternalReport ingest_report(std::string_view text, ReportFormat format);

Kind kind_from_infer(std::string_view token);
Kind kind_from_cppcheck(std::string_view message);
Kind kind_from_predator(std::string_view message);

} // namespace memlab

#endif // MEMLAB_INGEST_HPP
