//===-- diagnostics.cpp - Report rendering --------------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/diagnostics.hpp"

#include <json.hpp>

namespace memlab {

Report make_report(std::vector<Finding> findings, bool incomplete) {
  Report r;
  normalize_findings(findings);
  r.findings = std::move(findings);
  for (const auto &f : r.findings)
    ++r.summary[std::string(to_token(f.kind))];
  r.incomplete = incomplete;
  return r;
}

std::string render_text(const Report &report) {
  const std::size_t n = report.findings.size();
  std::string out = "Found " + std::to_string(n) +
                    (n == 1 ? " issue" : " issues") + "\n";
  if (n == 0)
    return out;
  out += "\n";
  for (const auto &f : report.findings) {
    out += f.file + ":" + std::to_string(f.line) + ": error: ";
    out += to_token(f.kind);
    out += "\n  " + f.message + "\n\n";
  }
  out += "Summary of the reports\n\n";
  for (const auto &[kind, count] : report.summary)
    out += "  " + kind + ": " + std::to_string(count) + "\n";
  return out;
}

std::string to_structured_line(const Finding &f) {
  nlohmann::ordered_json j;
  j["file"] = f.file;
  j["line"] = f.line;
  j["kind"] = to_token(f.kind);
  j["checker"] = f.checker;
  j["message"] = f.message;
  j["function"] = f.function;
  return j.dump();
}

std::string emit_structured(const Report &report) {
  std::string out;
  for (const auto &f : report.findings)
    out += to_structured_line(f) + "\n";
  return out;
}

} // namespace memlab
