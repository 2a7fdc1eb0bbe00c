// Reference implementations used by the unit and acceptance tests. None of
// them share code with the library beyond the plain data types.

#ifndef MEMLAB_TESTS_ORACLES_HPP
#define MEMLAB_TESTS_ORACLES_HPP

#include "memlab/cfg.hpp"
#include "memlab/classify.hpp"
#include "memlab/finding.hpp"
#include "memlab/truth.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

std::string source_dir();
std::string read_file(const std::string &path);

/// Counts tokens by walking characters. A preprocessor line is one token,
/// comments and whitespace are dropped.
int count_tokens_by_walk(const std::string &text);

/// Entry-to-exit paths ignoring loop-back edges, by plain recursion.
std::uint64_t walk_paths(const memlab::Cfg &cfg);

struct StraightLineProgram {
  std::string text;
  std::vector<int> leak_lines; // sorted, one per leaked block
};

/// Random program over a few pointer variables using malloc, free, copies
/// and NULL stores, with at most six allocations and six frees. The leak
/// lines come from executing it concretely.
StraightLineProgram random_straight_line(std::mt19937 &rng);

struct RandomClassification {
  std::vector<memlab::Finding> findings;
  std::vector<memlab::GroundTruthEntry> truth;
  int tolerance = 0;
};

RandomClassification random_classification(std::mt19937 &rng);

/// Matrix computed directly from the TP/FP/FN/TN definitions.
memlab::ConfusionMatrix reference_matrix(const RandomClassification &c);

} // namespace oracle

#endif
