//===-- classify.cpp - Finding classification -----------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/classify.hpp"

#include <cstdlib>
#include <set>

namespace memlab {

AmbiguousMatch::AmbiguousMatch(const std::string &where)
    : Error("ambiguous ground-truth match at " + where) {}

std::string_view to_string(Label label) {
  switch (label) {
  case Label::TruePositive:
    return "TP";
  case Label::FalsePositive:
    return "FP";
  case Label::Unmapped:
    return "UNMAPPED";
  }
  return "UNMAPPED";
}

std::optional<std::size_t>
match_finding(const Finding &finding,
              const std::vector<GroundTruthEntry> &truth, int tolerance) {
  std::optional<std::size_t> best;
  int best_dist = 0;
  bool tie = false;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const auto &e = truth[i];
    if (e.file != finding.file || e.kind != finding.kind)
      continue;
    int dist = std::abs(e.line - finding.line);
    if (dist > tolerance)
      continue;
    if (!best || dist < best_dist ||
        (dist == best_dist && e.line < truth[*best].line)) {
      best = i;
      best_dist = dist;
      tie = false;
    } else if (dist == best_dist && e.line == truth[*best].line) {
      tie = true;
    }
  }
  if (tie)
    throw AmbiguousMatch(finding.file + ":" +
                         std::to_string(truth[*best].line) + " " +
                         std::string(to_token(finding.kind)));
  return best;
}

Classification classify(const std::vector<Finding> &findings,
                        const std::vector<GroundTruthEntry> &truth,
                        int tolerance) {
  Classification c;
  std::set<std::size_t> claimed;
  for (const auto &f : findings) {
    if (f.kind == Kind::Unmapped) {
      c.labels.push_back(Label::Unmapped);
      c.match.push_back(std::nullopt);
      ++c.unmapped[f.kind];
      ++c.unmapped_total;
      continue;
    }
    auto m = match_finding(f, truth, tolerance);
    if (m && !claimed.insert(*m).second)
      m.reset(); // a second report of an already claimed entry
    ConfusionMatrix &cell = c.by_kind[f.kind];
    if (m && truth[*m].is_real) {
      c.labels.push_back(Label::TruePositive);
      ++cell.tp;
    } else {
      c.labels.push_back(Label::FalsePositive);
      ++cell.fp;
    }
    c.match.push_back(m);
  }
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (claimed.count(i) || truth[i].kind == Kind::Unmapped)
      continue;
    ConfusionMatrix &cell = c.by_kind[truth[i].kind];
    if (truth[i].is_real)
      ++cell.fn;
    else
      ++cell.tn;
  }
  for (const auto &[kind, cell] : c.by_kind)
    c.total += cell;
  return c;
}

Classification classify(const std::vector<Finding> &findings,
                        const TruthManifest &manifest,
                        const ClassifyOptions &options) {
  std::vector<GroundTruthEntry> present;
  for (const auto &e : manifest.entries)
    if (!options.version || expected_present(manifest, e, *options.version))
      present.push_back(e);
  Classification c = classify(findings, present, options.tolerance);
  // Indices refer to `present`; map them back to the manifest.
  for (auto &m : c.match) {
    if (!m)
      continue;
    const GroundTruthEntry &e = present[*m];
    for (std::size_t i = 0; i < manifest.entries.size(); ++i)
      if (manifest.entries[i] == e) {
        m = i;
        break;
      }
  }
  if (options.tool) {
    for (const auto &o : manifest.omitted) {
      if (o.tool != *options.tool)
        continue;
      if (o.kind == Kind::Unmapped) {
        c.unmapped[o.kind] += o.count;
        c.unmapped_total += o.count;
      } else {
        c.by_kind[o.kind].fp += o.count;
        c.total.fp += o.count;
      }
    }
  }
  return c;
}

} // namespace memlab
