#ifndef MEMLAB_TESTS_PROPERTIES_HPP
#define MEMLAB_TESTS_PROPERTIES_HPP

#include <string>

namespace oracle {

struct PropertyResult {
  bool ok = true;
  int cases = 0;
  std::string detail; // first counterexample
};

PropertyResult leak_oracle_equivalence(int programs, unsigned seed);
PropertyResult buggy_fixed_monotonicity(const std::string &manifest_path);
PropertyResult partition_law(int sets, unsigned seed);
/// Runs the CLI twice over the corpus and compares the outputs.
PropertyResult determinism(const std::string &corpus_dir);

} // namespace oracle

#endif
