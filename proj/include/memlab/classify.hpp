//===-- memlab/classify.hpp - Finding classification -----------*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_CLASSIFY_HPP
#define MEMLAB_CLASSIFY_HPP

#include "memlab/finding.hpp"
#include "memlab/truth.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace memlab {

struct ConfusionMatrix {
  int tp = 0;
  int fp = 0;
  int fn = 0;
  int tn = 0;

  int total() const noexcept { return tp + fp + fn + tn; }
  ConfusionMatrix &operator+=(const ConfusionMatrix &o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    tn += o.tn;
    return *this;
  }
  bool operator==(const ConfusionMatrix &) const = default;
};

class AmbiguousMatch : public Error {
public:
  explicit AmbiguousMatch(const std::string &where);
};

/// Index of the matching entry: same file and kind, nearest line within
/// `tolerance`, lower line on ties. Throws AmbiguousMatch when two entries
/// share the winning file, line and kind.
std::optional<std::size_t>
match_finding(const Finding &finding,
              const std::vector<GroundTruthEntry> &truth, int tolerance = 0);

enum class Label { TruePositive, FalsePositive, Unmapped };

std::string_view to_string(Label label);

struct ClassifyOptions {
  std::optional<std::string> version; // all entries when absent
  int tolerance = 0;
  std::optional<std::string> tool; // adds that tool's omitted counts
};

struct Classification {
  ConfusionMatrix total;
  std::map<Kind, ConfusionMatrix> by_kind;
  std::vector<Label> labels;                     // parallel to findings
  std::vector<std::optional<std::size_t>> match; // entry index per finding
  std::map<Kind, int> unmapped;                  // findings outside the kinds
  int unmapped_total = 0;
};

Classification classify(const std::vector<Finding> &findings,
                        const std::vector<GroundTruthEntry> &truth,
                        int tolerance = 0);

Classification classify(const std::vector<Finding> &findings,
                        const TruthManifest &manifest,
                        const ClassifyOptions &options = {});

} // namespace memlab

#endif // MEMLAB_CLASSIFY_HPP
