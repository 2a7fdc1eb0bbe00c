//===-- memlab/corpus.hpp - Corpus runner ----------------------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_CORPUS_HPP
#define MEMLAB_CORPUS_HPP

#include "memlab/analysis.hpp"
#include "memlab/classify.hpp"
#include "memlab/truth.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace memlab {

struct ExpectedFinding {
  int line = 0;
  Kind kind = Kind::Unmapped;
  auto operator<=>(const ExpectedFinding &) const = default;
};

struct CorpusCase {
  std::string fixture;              // relative to the manifest directory
  std::optional<std::string> fixed; // corrected counterpart
  std::string pattern;
  int row = 0; // pattern-matrix row, 0 for extra fixtures
  std::vector<ExpectedFinding> expected;
  std::map<std::string, bool> profiles; // profile -> detection expected
};

struct CorpusManifest {
  std::string root; // directory holding the fixtures
  std::vector<CorpusCase> cases;
};

CorpusManifest parse_corpus_manifest(std::string_view text,
                                     const std::string &root);
/// Throws ManifestError for unreadable manifests or missing fixtures.
CorpusManifest load_corpus_manifest(const std::string &path);

struct BenchOptions {
  bool emulate_reference_table = true;
  int jobs = 1;
  AnalysisOptions analysis;
  std::vector<CheckerId> disable; // applied to every profile
};

struct FixtureResult {
  std::string fixture;
  std::string pattern;
  std::string profile;
  bool is_fixed = false;
  bool expect_detection = false;
  bool detected = false;
  bool passed = false;
  std::vector<Finding> findings;
  std::string error; // frontend failure
};

struct BenchReport {
  std::vector<FixtureResult> results;
  // pattern -> profile -> detected on the buggy fixture
  std::map<std::string, std::map<std::string, bool>> matrix;
  std::map<std::string, int> rows; // pattern -> row
  std::map<std::string, ConfusionMatrix> confusion;
  std::vector<std::string> profiles;
  bool all_passed = true;
  double elapsed = 0;
};

CheckerConfig bench_config(const std::string &profile,
                           const BenchOptions &options);

BenchReport run_corpus(const CorpusManifest &manifest,
                       const std::vector<std::string> &profiles,
                       const BenchOptions &options = {});

std::string render_bench(const BenchReport &report);

} // namespace memlab

#endif // MEMLAB_CORPUS_HPP
