//===-- memlab/analysis.hpp - Path-sensitive heap analysis -----*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_ANALYSIS_HPP
#define MEMLAB_ANALYSIS_HPP

#include "memlab/ast.hpp"
#include "memlab/cfg.hpp"
#include "memlab/checkers.hpp"
#include "memlab/error.hpp"
#include "memlab/finding.hpp"
#include "memlab/heap.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace memlab {

struct FunctionSummary {
  std::string name;
  bool returns_fresh_allocation = false;
  bool may_return_null = false;
  std::set<int> frees_params;
  std::set<int> param_deref;
  // Extra effects needed for the wrapper patterns.
  bool returns_null_only = false;
  std::set<int> reallocs_params; // returns realloc(param) unchecked
  std::set<int> stores_params;   // param pointer escapes into memory

  bool operator==(const FunctionSummary &) const = default;
};

struct AnalysisOptions {
  std::size_t path_budget = 4096;
  int unroll_bound = 2;
  /// Throw AnalysisBudgetExceeded instead of degrading to joined states.
  bool strict_budget = false;
};

class AnalysisBudgetExceeded : public Error {
public:
  AnalysisBudgetExceeded(const std::string &function, std::size_t budget);
  const std::string &function() const noexcept { return function_; }

private:
  std::string function_;
};

struct AnalysisStats {
  std::map<std::string, std::size_t> paths; // per function, check pass
  int max_back_edge_traversals = 0;
};

struct AnalysisResult {
  std::vector<Finding> findings; // normalized
  bool incomplete = false;
  std::vector<std::string> warnings;
  std::map<std::string, FunctionSummary> summaries;
  AnalysisStats stats;
};

FunctionSummary summarize_function(const FunctionDef &fn, const Cfg &cfg,
                                   const TranslationUnit *tu = nullptr,
                                   const AnalysisOptions &options = {});

AnalysisResult analyze_unit(const TranslationUnit &tu,
                            const std::map<std::string, Cfg> &cfgs,
                            const CheckerConfig &config,
                            const AnalysisOptions &options = {});

/// Parse, build CFGs and analyze. Frontend errors propagate.
AnalysisResult analyze_file(const std::string &path,
                            const CheckerConfig &config,
                            const AnalysisOptions &options = {});

AnalysisResult analyze_text(const std::string &path, const std::string &text,
                            const CheckerConfig &config,
                            const AnalysisOptions &options = {});

// Individual checks over an evaluated path state.

struct CheckContext {
  const CheckerConfig *config = nullptr;
  std::string file;
  std::string function;
};

/// `pointer` is the value being dereferenced, `text` its source spelling.
std::optional<Finding> check_null_deref(const AbstractHeap &state,
                                        const PtrValue &pointer,
                                        std::string_view text, SourceLoc at,
                                        const CheckContext &ctx);

std::optional<Finding> check_invalid_free(const AbstractHeap &state,
                                          const PtrValue &argument,
                                          std::string_view text, SourceLoc at,
                                          const CheckContext &ctx);

struct LeakCheck {
  std::vector<Finding> findings;
  std::vector<SiteId> leaked;          // live sites no longer reachable
  std::vector<SiteId> realloc_orphans; // pending realloc sources lost
};

/// `before` names the references for messages (state prior to the
/// statement at line `at`).
LeakCheck check_memory_leak(const AbstractHeap &state,
                            const std::vector<PtrValue> &roots, int at,
                            const AbstractHeap &before,
                            const CheckContext &ctx);

struct StoreRecord {
  std::string var;
  SourceLoc loc;
  bool null_or_zero = false;
  bool used = false;
};

std::vector<Finding> check_dead_store(const std::vector<StoreRecord> &stores,
                                      const CheckContext &ctx);

std::optional<Finding> check_uninit_use(const AbstractHeap &state,
                                        std::string_view var, SourceLoc at,
                                        const CheckContext &ctx);

} // namespace memlab

#endif // MEMLAB_ANALYSIS_HPP
