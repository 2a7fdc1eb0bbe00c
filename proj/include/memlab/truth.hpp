//===-- memlab/truth.hpp - Ground-truth manifests --------------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_TRUTH_HPP
#define MEMLAB_TRUTH_HPP

#include "memlab/error.hpp"
#include "memlab/finding.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace memlab {

using Date = std::chrono::year_month_day;

/// Accepts `YYYY-MM-DD` and `DD/MM/YYYY`.
std::optional<Date> parse_date(std::string_view text);
std::string format_date(const Date &date);

enum class TruthSource { Commit, Issue, ManualReview };

std::string_view to_string(TruthSource source);
std::optional<TruthSource> truth_source_from_name(std::string_view name);

struct GroundTruthEntry {
  std::string file;
  int line = 0;
  Kind kind = Kind::Unmapped;
  bool is_real = true;
  std::string introduced_version;
  std::optional<std::string> fixed_version;
  std::optional<Date> introduced_date;
  std::optional<Date> fixed_date;
  TruthSource source = TruthSource::ManualReview;
  std::string note;

  bool operator==(const GroundTruthEntry &) const = default;
};

/// False positives a tool reported but that are kept only as a count.
struct OmittedCount {
  std::string tool;
  Kind kind = Kind::Unmapped;
  int count = 0;

  bool operator==(const OmittedCount &) const = default;
};

struct TruthManifest {
  std::string program;
  std::vector<std::string> versions; // oldest first
  std::vector<OmittedCount> omitted;
  std::vector<GroundTruthEntry> entries;

  /// Position in `versions`; throws UnknownVersion.
  std::size_t version_index(std::string_view version) const;
  int omitted_total(std::string_view tool) const;
};

class ManifestError : public Error {
public:
  ManifestError(const std::string &message, int line = 0);
  int line() const noexcept { return line_; }

private:
  int line_;
};

class UnknownVersion : public Error {
public:
  explicit UnknownVersion(const std::string &version);
};

TruthManifest parse_truth_manifest(std::string_view text);
TruthManifest load_truth_manifest(const std::string &path);

bool expected_present(const TruthManifest &manifest,
                      const GroundTruthEntry &entry, std::string_view version);

} // namespace memlab

#endif // MEMLAB_TRUTH_HPP
