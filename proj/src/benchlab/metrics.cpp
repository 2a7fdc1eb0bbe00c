//===-- metrics.cpp - Rates, size classes, persistence --------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/metrics.hpp"

#include <cmath>
#include <cstdio>

namespace memlab {

EmptyMatrix::EmptyMatrix() : Error("confusion matrix is empty") {}

Rates compute_rates(const ConfusionMatrix &m) {
  const int n = m.total();
  if (n <= 0)
    throw EmptyMatrix();
  const double d = n;
  return {m.fp / d, m.fn / d, m.tp / d, m.tn / d};
}

std::string_view to_string(SizeClass size) {
  switch (size) {
  case SizeClass::Small:
    return "Small";
  case SizeClass::Medium:
    return "Medium";
  case SizeClass::Large:
    return "Large";
  }
  return "Small";
}

SizeClassification classify_program_size(long line_count) {
  if (line_count <= 0)
    throw Error("line count must be positive");
  if (line_count < 2000)
    return {SizeClass::Small, true};
  if (line_count <= 6000)
    return {SizeClass::Small, false};
  if (line_count <= 64000)
    return {SizeClass::Medium, false};
  if (line_count <= 512000)
    return {SizeClass::Large, false};
  return {SizeClass::Large, true};
}

NegativeInterval::NegativeInterval()
    : Error("fix date precedes introduction date") {}

std::string Persistence::to_string() const {
  char buf[32];
  if (whole)
    std::snprintf(buf, sizeof buf, "%.0f", months);
  else
    std::snprintf(buf, sizeof buf, "%.2f", months);
  return buf;
}

int full_months_between(const Date &from, const Date &to) {
  int months = (int(to.year()) - int(from.year())) * 12 +
               (int(unsigned(to.month())) - int(unsigned(from.month())));
  if (to.day() < from.day())
    --months;
  return months;
}

Persistence compute_persistence(const Date &introduced, const Date &fixed) {
  using std::chrono::sys_days;
  if (sys_days(fixed) < sys_days(introduced))
    throw NegativeInterval();
  const int months = full_months_between(introduced, fixed);
  if (months >= 1)
    return {double(months), true};
  const auto days = (sys_days(fixed) - sys_days(introduced)).count();
  return {std::round(days / 30.0 * 100.0) / 100.0, false};
}

} // namespace memlab
