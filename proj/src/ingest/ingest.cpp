//===-- ingest.cpp - External report parsers ------------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/ingest.hpp"

#include <json.hpp>

#include <regex>

namespace memlab {

FormatError::FormatError(const std::string &message, int line)
    : Error("report line " + std::to_string(line) + ": " + message),
      line_(line) {}

std::string_view to_string(ReportFormat format) {
  switch (format) {
  case ReportFormat::Infer:
    return "infer";
  case ReportFormat::Cppcheck:
    return "cppcheck";
  case ReportFormat::Predator:
    return "predator";
  case ReportFormat::Memlab:
    return "memlab";
  }
  return "memlab";
}

std::optional<ReportFormat> format_from_name(std::string_view name) {
  for (auto f : {ReportFormat::Infer, ReportFormat::Cppcheck,
                 ReportFormat::Predator, ReportFormat::Memlab})
    if (to_string(f) == name)
      return f;
  return std::nullopt;
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos)
    return {};
  std::size_t e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

bool blank(const std::string &s) { return trim(s).empty(); }

void append(std::string &acc, const std::string &piece) {
  std::string t = trim(piece);
  if (t.empty())
    return;
  while (!acc.empty() && (acc.back() == ' ' || acc.back() == '\t'))
    acc.pop_back();
  if (!acc.empty())
    acc += ' ';
  acc += t;
}

std::string squeeze(const std::string &s) {
  std::string out;
  for (char c : s) {
    if ((c == ' ' || c == '\t') && (out.empty() || out.back() == ' '))
      continue;
    out += c == '\t' ? ' ' : c;
  }
  return trim(out);
}

bool contains(std::string_view hay, std::string_view needle) {
  return hay.find(needle) != std::string_view::npos;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

Finding make(const std::string &file, int line, Kind kind,
             std::string_view tool, std::string message,
             std::optional<int> column = std::nullopt) {
  Finding f;
  f.file = file;
  f.line = line;
  f.kind = kind;
  f.checker = std::string(tool);
  f.message = std::move(message);
  f.column = column;
  return f;
}

} // namespace

Kind kind_from_infer(std::string_view token) {
  if (auto k = kind_from_token(token))
    return *k;
  return Kind::Unmapped;
}

Kind kind_from_cppcheck(std::string_view message) {
  if (starts_with(message, "Memory leak") ||
      starts_with(message, "Common realloc mistake"))
    return Kind::MemoryLeak;
  if (starts_with(message, "Resource leak"))
    return Kind::ResourceLeak;
  if (starts_with(message, "Null pointer dereference") ||
      starts_with(message, "Possible null pointer dereference"))
    return Kind::NullDereference;
  if (starts_with(message, "Deallocating a deallocated pointer") ||
      (starts_with(message, "Memory pointed to by") &&
       contains(message, "is freed twice")))
    return Kind::InvalidFree;
  if (starts_with(message, "Uninitialized variable"))
    return Kind::UninitializedValue;
  return Kind::Unmapped;
}

Kind kind_from_predator(std::string_view message) {
  if (contains(message, "memory leak detected"))
    return Kind::MemoryLeak;
  if (contains(message, "invalid dereference") ||
      contains(message, "dereference NULL"))
    return Kind::InvalidDereference;
  if (contains(message, "invalid free") || contains(message, "double free"))
    return Kind::InvalidFree;
  return Kind::Unmapped;
}

std::vector<Finding> parse_infer_report(std::string_view text) {
  static const std::regex header(R"(^Found (\d+) issues?\s*$)");
  static const std::regex record(R"(^([^\s:]+):(\d+):\s*(.*)$)");
  static const std::regex context(R"(^\s+\d+\.)");
  static const std::regex body(R"(^(error|warning|info):\s*([A-Z_]+)\s*(.*)$)");

  const auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && blank(lines[i]))
    ++i;
  if (i == lines.size())
    return {};
  std::smatch m;
  if (!std::regex_match(lines[i], m, header))
    throw FormatError("expected `Found N issue(s)`", static_cast<int>(i) + 1);
  const int header_line = static_cast<int>(i) + 1;
  const long expected = std::stol(m[1].str());
  ++i;

  std::vector<Finding> out;
  while (i < lines.size()) {
    const std::string &line = lines[i];
    if (blank(line) || std::regex_search(line, context)) {
      ++i;
      continue;
    }
    if (trim(line) == "Summary of the reports")
      break;
    if (!std::regex_match(line, m, record))
      throw FormatError("unexpected text `" + trim(line) + "`",
                        static_cast<int>(i) + 1);
    const int record_line = static_cast<int>(i) + 1;
    std::string file = m[1].str();
    int line_no = std::stoi(m[2].str());
    std::string rest = m[3].str();
    ++i;
    while (i < lines.size() && !blank(lines[i]) &&
           !std::regex_search(lines[i], context) &&
           !std::regex_match(lines[i], record)) {
      append(rest, lines[i]);
      ++i;
    }
    rest = trim(rest);
    std::smatch b;
    if (!std::regex_match(rest, b, body))
      throw FormatError("missing `error: KIND`", record_line);
    out.push_back(make(file, line_no, kind_from_infer(b[2].str()), "infer",
                       b[3].str()));
  }
  if (static_cast<long>(out.size()) != expected)
    throw FormatError("header announces " + std::to_string(expected) +
                          " issue(s) but " + std::to_string(out.size()) +
                          " were found",
                      header_line);
  return out;
}

std::vector<Finding> parse_cppcheck_report(std::string_view text) {
  static const std::regex record(R"(^\[([^\]:]+):(\d+)\]:\s*(.*)$)");
  static const std::regex body(R"(^\((\w+)\)\s*(.*)$)");

  const auto lines = split_lines(text);
  std::vector<Finding> out;
  std::size_t i = 0;
  auto banner = [](const std::string &l) {
    std::string t = trim(l);
    return starts_with(t, "Checking ") || contains(t, "files checked");
  };
  while (i < lines.size()) {
    const std::string &line = lines[i];
    if (blank(line) || banner(line)) {
      ++i;
      continue;
    }
    const int record_line = static_cast<int>(i) + 1;
    std::smatch m;
    if (!std::regex_match(line, m, record))
      throw FormatError("malformed line `" + trim(line) + "`", record_line);
    std::string file = m[1].str();
    int line_no = std::stoi(m[2].str());
    std::string rest = m[3].str();
    ++i;
    while (i < lines.size() && !blank(lines[i]) && !banner(lines[i]) &&
           trim(lines[i]).front() != '[') {
      append(rest, lines[i]);
      ++i;
    }
    rest = trim(rest);
    std::smatch b;
    if (!std::regex_match(rest, b, body))
      throw FormatError("missing `(severity)`", record_line);
    if (b[1].str() != "error")
      continue;
    std::string message = b[2].str();
    out.push_back(make(file, line_no, kind_from_cppcheck(message), "cppcheck",
                       message));
  }
  return out;
}

std::vector<Finding> parse_predator_report(std::string_view text) {
  static const std::regex record(R"(^([^\s:]+):(\d+)(?::(\d+))?:\s*(.*)$)");
  static const std::regex body(R"(^(warning|error|note):\s*(.*)$)");

  const auto lines = split_lines(text);
  std::vector<Finding> out;
  std::size_t i = 0;
  while (i < lines.size()) {
    const std::string &line = lines[i];
    if (blank(line)) {
      ++i;
      continue;
    }
    const int record_line = static_cast<int>(i) + 1;
    std::smatch m;
    if (!std::regex_match(line, m, record))
      throw FormatError("expected `path:line:col: warning:`", record_line);
    std::string file = m[1].str();
    int line_no = std::stoi(m[2].str());
    std::optional<int> column;
    if (m[3].matched)
      column = std::stoi(m[3].str());
    std::string rest = m[4].str();
    ++i;
    while (i < lines.size() && !blank(lines[i]) &&
           !std::regex_match(lines[i], record)) {
      append(rest, lines[i]);
      ++i;
    }
    for (std::string tag : {"[-fplugin=libsl.so]", "[internal location]"}) {
      std::size_t p;
      while ((p = rest.find(tag)) != std::string::npos)
        rest.erase(p, tag.size());
    }
    rest = squeeze(rest);
    std::smatch b;
    if (!std::regex_match(rest, b, body))
      throw FormatError("missing severity", record_line);
    if (b[1].str() == "note")
      continue;
    if (!column)
      throw FormatError("warning without `path:line:col`", record_line);
    std::string message = trim(b[2].str());
    out.push_back(make(file, line_no, kind_from_predator(message), "predator",
                       message, column));
  }
  return out;
}

std::vector<Finding> parse_structured_findings(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<Finding> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (blank(lines[i]))
      continue;
    const int at = static_cast<int>(i) + 1;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(lines[i]);
    } catch (const nlohmann::json::exception &e) {
      throw FormatError(e.what(), at);
    }
    if (!j.is_object() || !j.contains("file") || !j.contains("line") ||
        !j.contains("kind"))
      throw FormatError("record needs file, line and kind", at);
    try {
      Finding f;
      f.file = j.at("file").get<std::string>();
      f.line = j.at("line").get<int>();
      auto kind = kind_from_token(j.at("kind").get<std::string>());
      if (!kind)
        throw FormatError("unknown kind `" + j.at("kind").get<std::string>() +
                              "`",
                          at);
      f.kind = *kind;
      f.checker = j.value("checker", std::string());
      f.message = j.value("message", std::string());
      f.function = j.value("function", std::string());
      if (j.contains("column") && j["column"].is_number_integer())
        f.column = j["column"].get<int>();
      out.push_back(std::move(f));
    } catch (const nlohmann::json::exception &e) {
      throw FormatError(e.what(), at);
    }
  }
  return out;
}

ExternalReport ingest_report(std::string_view text, ReportFormat format) {
  ExternalReport r;
  r.tool = format;
  r.raw = std::string(text);
  switch (format) {
  case ReportFormat::Infer:
    r.findings = parse_infer_report(text);
    break;
  case ReportFormat::Cppcheck:
    r.findings = parse_cppcheck_report(text);
    break;
  case ReportFormat::Predator:
    r.findings = parse_predator_report(text);
    break;
  case ReportFormat::Memlab:
    r.findings = parse_structured_findings(text);
    break;
  }
  return r;
}

} // namespace memlab
