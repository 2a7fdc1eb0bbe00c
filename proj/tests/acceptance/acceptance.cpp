// Acceptance gate. `memlab_acceptance [N...]` prints one PASS/FAIL line per
// criterion and exits non-zero if any selected criterion fails.

#include "../support/oracles.hpp"
#include "../support/properties.hpp"

#include "memlab/analysis.hpp"
#include "memlab/classify.hpp"
#include "memlab/corpus.hpp"
#include "memlab/ingest.hpp"
#include "memlab/metrics.hpp"
#include "memlab/truth.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace memlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string &why) {
    if (ok)
      detail = why;
    else
      detail += "; " + why;
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string root() { return oracle::source_dir(); }
std::string corpus_manifest() { return root() + "/corpus/manifest.ndjson"; }

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::fixed << v;
  return ss.str();
}

Outcome corpus_golden() {
  Outcome o;
  const auto start = Clock::now();
  const auto manifest = load_corpus_manifest(corpus_manifest());
  const CheckerConfig buggy_config = make_profile("union");
  CheckerConfig fixed_config = make_profile("union");
  fixed_config.disable(CheckerId::DeadStoreNullInit);
  fixed_config.disable(CheckerId::InteriorFree);
  int checked = 0;
  for (const auto &c : manifest.cases) {
    auto buggy = analyze_file((fs::path(manifest.root) / c.fixture).string(),
                              buggy_config);
    std::set<ExpectedFinding> seen, want(c.expected.begin(), c.expected.end());
    for (const auto &f : buggy.findings)
      seen.insert({f.line, f.kind});
    ++checked;
    if (seen != want || buggy.findings.size() != c.expected.size())
      o.fail(c.fixture + " reported " + std::to_string(buggy.findings.size()) +
             " finding(s) not matching its expectation");
    if (!c.fixed)
      continue;
    auto fixed = analyze_file((fs::path(manifest.root) / *c.fixed).string(),
                              fixed_config);
    ++checked;
    if (!fixed.findings.empty())
      o.fail(*c.fixed + " reported " + std::to_string(fixed.findings.size()) +
             " finding(s)");
  }
  const double t = seconds_since(start);
  if (t >= 2.0)
    o.fail("took " + fmt(t) + " s");
  if (o.ok)
    o.detail = std::to_string(checked) + " fixtures in " + fmt(t) + " s";
  return o;
}

// Detection columns of the reference pattern table, rows 1 to 11.
const std::map<std::string, std::string> &reference_columns() {
  static const std::map<std::string, std::string> cols = {
      {"union", "YYYYYYYYYYY"},
      {"cppcheck-like", "YNNNNNYNYNN"},
      {"clang-like", "YYNYNYNNYYY"},
      {"infer-like", "YYYNYYYYYYY"},
      {"predator-like", "YYNYNNNNYYY"},
  };
  return cols;
}

Outcome pattern_matrix() {
  Outcome o;
  const auto manifest = load_corpus_manifest(corpus_manifest());
  BenchOptions options;
  options.emulate_reference_table = true;
  const auto report = run_corpus(manifest, profile_names(), options);
  std::map<int, std::string> by_row;
  for (const auto &[pattern, row] : report.rows)
    if (row > 0)
      by_row[row] = pattern;
  if (by_row.size() != 11)
    o.fail("corpus covers " + std::to_string(by_row.size()) + " of 11 rows");
  for (const auto &[profile, column] : reference_columns()) {
    for (int row = 1; row <= 11; ++row) {
      auto it = by_row.find(row);
      if (it == by_row.end())
        continue;
      const bool want = column[row - 1] == 'Y';
      const bool got = report.matrix.at(it->second).at(profile);
      if (got != want)
        o.fail(profile + " row " + std::to_string(row) + " detected=" +
               (got ? "yes" : "no"));
    }
  }
  if (o.ok)
    o.detail = "11 rows x 5 profiles match";
  return o;
}

Outcome classification() {
  Outcome o;
  struct Cell {
    std::string program, tool;
    Kind kind;
    std::optional<int> tp, fp;
  };
  const std::vector<Cell> cells = {
      {"sds", "infer", Kind::NullDereference, 4, 0},
      {"sds", "predator", Kind::MemoryLeak, 0, 3},
      {"sds", "clang", Kind::InvalidFree, std::nullopt, 2},
      {"beanstalkd", "infer", Kind::NullDereference, 9, std::nullopt},
      {"beanstalkd", "predator", Kind::InvalidDereference, std::nullopt, 125},
  };
  for (const auto &c : cells) {
    const auto manifest =
        load_truth_manifest(root() + "/data/truth/" + c.program + ".manifest");
    const auto findings = parse_structured_findings(oracle::read_file(
        root() + "/data/reports/" + c.program + "-" + c.tool + ".ndjson"));
    ClassifyOptions opts;
    opts.tool = c.tool;
    const auto result = classify(findings, manifest, opts);
    ConfusionMatrix m;
    if (auto it = result.by_kind.find(c.kind); it != result.by_kind.end())
      m = it->second;
    const std::string cell =
        c.program + " " + c.tool + " " + std::string(to_token(c.kind));
    if (c.tp && m.tp != *c.tp)
      o.fail(cell + " TP " + std::to_string(m.tp) + " expected " +
             std::to_string(*c.tp));
    if (c.fp && m.fp != *c.fp)
      o.fail(cell + " FP " + std::to_string(m.fp) + " expected " +
             std::to_string(*c.fp));
  }
  if (o.ok)
    o.detail = "5 cells match";
  return o;
}

Outcome ingestion() {
  Outcome o;
  struct Case {
    std::string report;
    ReportFormat format;
    std::string file;
    int line;
    Kind kind;
  };
  const std::vector<Case> cases = {
      {"infer_dead_store_overwrite.txt", ReportFormat::Infer,
       "dead_store_false_positive_infer.c", 8, Kind::DeadStore},
      {"cppcheck_leak_struct_field.txt", ReportFormat::Cppcheck,
       "memory_leak_true_positive_structwithpointer_infer.c", 19,
       Kind::MemoryLeak},
      {"cppcheck_leak_realloc.txt", ReportFormat::Cppcheck,
       "memory_leak_true_positive_realloc_infer.c", 14, Kind::MemoryLeak},
      {"infer_null_deref.txt", ReportFormat::Infer,
       "null_dereference_true_positive_mallocverification.c", 13,
       Kind::NullDereference},
      {"predator_leak_sizeof_deref.txt", ReportFormat::Predator,
       "memory_leak_false_negative_infer.c", 20, Kind::MemoryLeak},
  };
  for (const auto &c : cases) {
    try {
      const auto r = ingest_report(
          oracle::read_file(root() + "/corpus/reports/" + c.report), c.format);
      if (r.findings.size() != 1) {
        o.fail(c.report + " gave " + std::to_string(r.findings.size()) +
               " findings");
        continue;
      }
      const auto &f = r.findings.front();
      if (f.file != c.file || f.line != c.line || f.kind != c.kind)
        o.fail(c.report + " gave " + f.file + ":" + std::to_string(f.line) +
               " " + std::string(to_token(f.kind)));
    } catch (const std::exception &e) {
      o.fail(c.report + ": " + e.what());
    }
  }
  if (o.ok)
    o.detail = "5 reports parsed";
  return o;
}

Outcome size_classes() {
  Outcome o;
  const std::vector<std::pair<long, SizeClass>> cases = {
      {2000, SizeClass::Small},
      {6000, SizeClass::Small},
      {30000, SizeClass::Medium},
      {64000, SizeClass::Medium},
      {100000, SizeClass::Large}};
  for (const auto &[lines, want] : cases) {
    const auto got = classify_program_size(lines).size;
    if (got != want)
      o.fail(std::to_string(lines) + " -> " + std::string(to_string(got)));
  }
  if (o.ok)
    o.detail = "5 sizes match";
  return o;
}

Outcome persistence() {
  Outcome o;
  // Reference intervals, keyed by file:line.
  const std::map<std::string, std::map<std::string, std::string>> reference = {
      {"sds",
       {{"sds.c:159", "9"},
        {"sds.c:160", "9"},
        {"sds.c:891", "17"},
        {"sds.c:894", "17"},
        {"sds.c:92", "30"}}},
      {"beanstalkd",
       {{"net.c:28", "22"},
        {"beanstalkd.c:41", "50"},
        {"reserve.c:51", "50"},
        {"prot.c:140", "50"},
        {"beanstalkd.c:395", "14"},
        {"beanstalkd.c:737", "1"},
        {"prot.c:320", "47"},
        {"prot.c:374", "47"},
        {"cut.c:222", "36"},
        {"binlog.c:215", "0.13"},
        {"binlog.c:723", "27"},
        {"job.c:70", "1"},
        {"net.c:31", "14"},
        {"prot.c:514", "9"},
        {"prot.c:554", "9"},
        {"file.c:204", "3"},
        {"file.c:325", "3"},
        {"walg.c:416", "15"}}},
  };
  int rows = 0;
  for (const auto &[program, values] : reference) {
    const auto manifest =
        load_truth_manifest(root() + "/data/truth/" + program + ".manifest");
    std::set<std::string> found;
    for (const auto &e : manifest.entries) {
      if (!e.introduced_date || !e.fixed_date)
        continue;
      const std::string key = e.file + ":" + std::to_string(e.line);
      auto it = values.find(key);
      if (it == values.end()) {
        o.fail(key + " has dates but no reference value");
        continue;
      }
      found.insert(key);
      ++rows;
      const std::string got =
          compute_persistence(*e.introduced_date, *e.fixed_date).to_string();
      if (got != it->second)
        o.fail(key + " " + got + " expected " + it->second);
    }
    for (const auto &[key, v] : values)
      if (!found.count(key))
        o.fail(key + " missing from the " + program + " manifest");
  }
  if (o.ok)
    o.detail = std::to_string(rows) + " rows match";
  return o;
}

Outcome properties() {
  Outcome o;
  const auto start = Clock::now();
  const auto leak = oracle::leak_oracle_equivalence(1000, 20240611u);
  if (!leak.ok)
    o.fail("leak oracle: " + leak.detail);
  const auto mono = oracle::buggy_fixed_monotonicity(corpus_manifest());
  if (!mono.ok)
    o.fail("monotonicity: " + mono.detail);
  const auto part = oracle::partition_law(1000, 99u);
  if (!part.ok)
    o.fail("partition law: " + part.detail);
  const auto det = oracle::determinism(root() + "/corpus");
  if (!det.ok)
    o.fail("determinism: " + det.detail);
  const double t = seconds_since(start);
  if (t >= 30.0)
    o.fail("took " + fmt(t) + " s");
  if (o.ok)
    o.detail = std::to_string(leak.cases) + " programs, " +
               std::to_string(mono.cases) + " pairs, " +
               std::to_string(part.cases) + " sets, " +
               std::to_string(det.cases) + " commands in " + fmt(t) + " s";
  return o;
}

} // namespace

int main(int argc, char **argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>>
      criteria = {
          {"corpus golden suite", corpus_golden},
          {"pattern matrix", pattern_matrix},
          {"classification cells", classification},
          {"report ingestion", ingestion},
          {"size classes", size_classes},
          {"persistence", persistence},
          {"property suite", properties},
      };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i)
    selected.push_back(std::stoi(argv[i]));
  if (selected.empty())
    for (int i = 1; i <= static_cast<int>(criteria.size()); ++i)
      selected.push_back(i);

  int failed = 0;
  for (int n : selected) {
    if (n < 1 || n > static_cast<int>(criteria.size())) {
      std::cerr << "no criterion " << n << "\n";
      return 2;
    }
    const auto &[name, run] = criteria[n - 1];
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o.fail(std::string("error: ") + e.what());
    }
    std::cout << "criterion " << n << " (" << name
              << "): " << (o.ok ? "PASS" : "FAIL") << " - " << o.detail
              << "\n";
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
