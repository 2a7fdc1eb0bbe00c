//===-- memlab/metrics.hpp - Rates, size classes, persistence --*- C++ -*-===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#ifndef MEMLAB_METRICS_HPP
#define MEMLAB_METRICS_HPP

#include "memlab/classify.hpp"
#include "memlab/truth.hpp"

#include <string>
#include <string_view>

namespace memlab {

struct Rates {
  double fp_rate = 0;
  double fn_rate = 0;
  double tp_rate = 0;
  double tn_rate = 0;
};

class EmptyMatrix : public Error {
public:
  EmptyMatrix();
};

/// Each cell over tp+fp+fn+tn.
Rates compute_rates(const ConfusionMatrix &m);

enum class SizeClass { Small, Medium, Large };

std::string_view to_string(SizeClass size);

struct SizeClassification {
  SizeClass size = SizeClass::Small;
  bool out_of_range = false;
};

/// Small up to 6000 lines, Medium up to 64000, Large up to 512000.
SizeClassification classify_program_size(long line_count);

class NegativeInterval : public Error {
public:
  NegativeInterval();
};

struct Persistence {
  double months = 0;
  bool whole = true; // false when below one month (days / 30)

  /// "9" or "0.13".
  std::string to_string() const;
};

int full_months_between(const Date &from, const Date &to);

Persistence compute_persistence(const Date &introduced, const Date &fixed);

} // namespace memlab

#endif // MEMLAB_METRICS_HPP
