//===-- truth.cpp - Ground-truth manifests --------------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/truth.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace memlab {

std::optional<Date> parse_date(std::string_view text) {
  int a = 0, b = 0, c = 0;
  char tail = 0;
  std::string s(text);
  Date d;
  if (std::sscanf(s.c_str(), "%d-%d-%d%c", &a, &b, &c, &tail) == 3)
    d = std::chrono::year{a} / std::chrono::month{unsigned(b)} /
        std::chrono::day{unsigned(c)};
  else if (std::sscanf(s.c_str(), "%d/%d/%d%c", &a, &b, &c, &tail) == 3)
    d = std::chrono::year{c} / std::chrono::month{unsigned(b)} /
        std::chrono::day{unsigned(a)};
  else
    return std::nullopt;
  if (!d.ok())
    return std::nullopt;
  return d;
}

std::string format_date(const Date &date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(date.year()),
                unsigned(date.month()), unsigned(date.day()));
  return buf;
}

std::string_view to_string(TruthSource source) {
  switch (source) {
  case TruthSource::Commit:
    return "commit";
  case TruthSource::Issue:
    return "issue";
  case TruthSource::ManualReview:
    return "manual-review";
  }
  return "manual-review";
}

std::optional<TruthSource> truth_source_from_name(std::string_view name) {
  for (auto s :
       {TruthSource::Commit, TruthSource::Issue, TruthSource::ManualReview})
    if (to_string(s) == name)
      return s;
  return std::nullopt;
}

ManifestError::ManifestError(const std::string &message, int line)
    : Error(line > 0 ? "manifest line " + std::to_string(line) + ": " + message
                     : message),
      line_(line) {}

UnknownVersion::UnknownVersion(const std::string &version)
    : Error("unknown version `" + version + "`") {}

std::size_t TruthManifest::version_index(std::string_view version) const {
  for (std::size_t i = 0; i < versions.size(); ++i)
    if (versions[i] == version)
      return i;
  throw UnknownVersion(std::string(version));
}

int TruthManifest::omitted_total(std::string_view tool) const {
  int n = 0;
  for (const auto &o : omitted)
    if (o.tool == tool)
      n += o.count;
  return n;
}

namespace {

Kind parse_kind(const nlohmann::json &j, int line) {
  auto k = kind_from_token(j.get<std::string>());
  if (!k)
    throw ManifestError("unknown kind `" + j.get<std::string>() + "`", line);
  return *k;
}

std::optional<Date> parse_optional_date(const nlohmann::json &j,
                                        const char *key, int line) {
  if (!j.contains(key) || j[key].is_null())
    return std::nullopt;
  auto d = parse_date(j[key].get<std::string>());
  if (!d)
    throw ManifestError(std::string("bad date in `") + key + "`", line);
  return d;
}

} // namespace

TruthManifest parse_truth_manifest(std::string_view text) {
  TruthManifest m;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  bool have_header = false;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(raw);
      const std::string record = j.value("record", std::string("entry"));
      if (record == "header") {
        if (have_header)
          throw ManifestError("duplicate header", line);
        have_header = true;
        m.program = j.at("program").get<std::string>();
        m.versions = j.at("versions").get<std::vector<std::string>>();
        if (j.contains("omitted_false_positives"))
          for (const auto &o : j["omitted_false_positives"])
            m.omitted.push_back({o.at("tool").get<std::string>(),
                                 parse_kind(o.at("kind"), line),
                                 o.at("count").get<int>()});
        continue;
      }
      if (record != "entry")
        throw ManifestError("unknown record type `" + record + "`", line);
      if (!have_header)
        throw ManifestError("entry before header", line);
      GroundTruthEntry e;
      e.file = j.at("file").get<std::string>();
      e.line = j.at("line").get<int>();
      e.kind = parse_kind(j.at("kind"), line);
      e.is_real = j.at("is_real").get<bool>();
      e.introduced_version = j.at("introduced_version").get<std::string>();
      if (j.contains("fixed_version") && !j["fixed_version"].is_null())
        e.fixed_version = j["fixed_version"].get<std::string>();
      e.introduced_date = parse_optional_date(j, "introduced_date", line);
      e.fixed_date = parse_optional_date(j, "fixed_date", line);
      auto src = truth_source_from_name(j.at("source").get<std::string>());
      if (!src)
        throw ManifestError("unknown source", line);
      e.source = *src;
      e.note = j.value("note", std::string());
      m.version_index(e.introduced_version);
      if (e.fixed_version)
        m.version_index(*e.fixed_version);
      m.entries.push_back(std::move(e));
    } catch (const nlohmann::json::exception &ex) {
      throw ManifestError(ex.what(), line);
    } catch (const UnknownVersion &ex) {
      throw ManifestError(ex.what(), line);
    }
  }
  if (!have_header)
    throw ManifestError("missing header record");
  return m;
}

TruthManifest load_truth_manifest(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ManifestError("cannot open `" + path + "`");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_truth_manifest(ss.str());
}

bool expected_present(const TruthManifest &manifest,
                      const GroundTruthEntry &entry,
                      std::string_view version) {
  const std::size_t v = manifest.version_index(version);
  if (manifest.version_index(entry.introduced_version) > v)
    return false;
  return !entry.fixed_version || v < manifest.version_index(*entry.fixed_version);
}

} // namespace memlab
