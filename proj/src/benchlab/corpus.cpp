//===-- corpus.cpp - Corpus runner ----------------------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/corpus.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

namespace memlab {

namespace fs = std::filesystem;

CorpusManifest parse_corpus_manifest(std::string_view text,
                                     const std::string &root) {
  CorpusManifest m;
  m.root = root;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (raw.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    try {
      auto j = nlohmann::json::parse(raw);
      CorpusCase c;
      c.fixture = j.at("fixture").get<std::string>();
      if (j.contains("fixed") && !j["fixed"].is_null())
        c.fixed = j["fixed"].get<std::string>();
      c.pattern = j.at("pattern").get<std::string>();
      c.row = j.value("row", 0);
      for (const auto &e : j.at("expected")) {
        auto kind = kind_from_token(e.at("kind").get<std::string>());
        if (!kind)
          throw ManifestError("unknown kind", line);
        c.expected.push_back({e.at("line").get<int>(), *kind});
      }
      std::sort(c.expected.begin(), c.expected.end());
      for (const auto &[profile, expect] : j.at("profiles").items())
        c.profiles[profile] = expect.get<bool>();
      m.cases.push_back(std::move(c));
    } catch (const nlohmann::json::exception &e) {
      throw ManifestError(e.what(), line);
    }
  }
  for (const auto &c : m.cases) {
    for (const auto *p : {&c.fixture, c.fixed ? &*c.fixed : nullptr}) {
      if (p && !fs::exists(fs::path(root) / *p))
        throw ManifestError("missing fixture `" + *p + "`");
    }
  }
  return m;
}

CorpusManifest load_corpus_manifest(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ManifestError("cannot open `" + path + "`");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_corpus_manifest(ss.str(),
                               fs::path(path).parent_path().string());
}

CheckerConfig bench_config(const std::string &profile,
                           const BenchOptions &options) {
  CheckerConfig config = make_profile(profile);
  if (options.emulate_reference_table)
    apply_table_emulation(config);
  for (CheckerId id : options.disable)
    config.disable(id);
  return config;
}

namespace {

struct Task {
  const CorpusCase *c;
  std::string profile;
  bool fixed;
};

std::vector<ExpectedFinding> observed(const std::vector<Finding> &findings) {
  std::vector<ExpectedFinding> out;
  for (const auto &f : findings)
    out.push_back({f.line, f.kind});
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FixtureResult run_task(const CorpusManifest &m, const Task &t,
                       const BenchOptions &options) {
  FixtureResult r;
  const std::string &rel = t.fixed ? *t.c->fixed : t.c->fixture;
  r.fixture = rel;
  r.pattern = t.c->pattern;
  r.profile = t.profile;
  r.is_fixed = t.fixed;
  auto it = t.c->profiles.find(t.profile);
  r.expect_detection = !t.fixed && it != t.c->profiles.end() && it->second;
  try {
    CheckerConfig config = bench_config(t.profile, options);
    AnalysisResult a = analyze_file((fs::path(m.root) / rel).string(), config,
                                    options.analysis);
    // Report paths relative to the corpus root.
    for (auto &f : a.findings)
      f.file = rel;
    r.findings = std::move(a.findings);
  } catch (const std::exception &e) {
    r.error = e.what();
    return r;
  }
  const auto seen = observed(r.findings);
  if (t.fixed) {
    r.detected = !seen.empty();
    r.passed = seen.empty();
  } else {
    r.detected = !t.c->expected.empty() &&
                 std::includes(seen.begin(), seen.end(),
                               t.c->expected.begin(), t.c->expected.end());
    r.passed = r.expect_detection ? seen == t.c->expected : seen.empty();
  }
  return r;
}

} // namespace

BenchReport run_corpus(const CorpusManifest &manifest,
                       const std::vector<std::string> &profiles,
                       const BenchOptions &options) {
  const auto start = std::chrono::steady_clock::now();
  for (const auto &p : profiles)
    make_profile(p); // reject unknown names before any work

  std::vector<Task> tasks;
  for (const auto &c : manifest.cases)
    for (const auto &p : profiles) {
      tasks.push_back({&c, p, false});
      if (c.fixed)
        tasks.push_back({&c, p, true});
    }

  std::vector<FixtureResult> results(tasks.size());
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i)
      results[i] = run_task(manifest, tasks[i], options);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++)
          results[i] = run_task(manifest, tasks[i], options);
      });
    for (auto &t : pool)
      t.join();
  }

  BenchReport report;
  report.profiles = profiles;
  for (const auto &c : manifest.cases)
    if (c.row > 0)
      report.rows[c.pattern] = c.row;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const Task &t = tasks[i];
    FixtureResult &r = results[i];
    report.all_passed &= r.passed;
    ConfusionMatrix &cm = report.confusion[t.profile];
    const auto seen = observed(r.findings);
    if (t.fixed) {
      cm.fp += static_cast<int>(seen.size());
      cm.tn += seen.empty() ? 1 : 0;
    } else {
      report.matrix[t.c->pattern][t.profile] = r.detected;
      const auto &exp = t.c->expected;
      int hit = 0;
      for (const auto &e : exp)
        hit += std::binary_search(seen.begin(), seen.end(), e) ? 1 : 0;
      if (r.expect_detection) {
        cm.tp += hit;
        cm.fn += static_cast<int>(exp.size()) - hit;
        cm.fp += static_cast<int>(seen.size()) - hit;
      } else {
        cm.fp += static_cast<int>(seen.size());
        cm.tn += seen.empty() ? 1 : 0;
      }
    }
  }
  report.results = std::move(results);
  report.elapsed = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

std::string render_bench(const BenchReport &report) {
  std::ostringstream out;
  int failed = 0;
  for (const auto &r : report.results) {
    if (!r.passed)
      ++failed;
    out << (r.passed ? "PASS " : "FAIL ") << r.profile << ' ' << r.fixture
        << (r.is_fixed ? " (fixed)" : "") << ": " << r.findings.size()
        << " finding(s)";
    if (!r.is_fixed)
      out << ", detection " << (r.expect_detection ? "expected" : "not expected");
    if (!r.error.empty())
      out << ", error: " << r.error;
    out << '\n';
    if (!r.passed)
      for (const auto &f : r.findings)
        out << "    " << f.file << ':' << f.line << ": " << to_token(f.kind)
            << " [" << f.checker << "]\n";
  }

  out << "\nPattern matrix\n";
  std::vector<std::pair<int, std::string>> rows;
  for (const auto &[pattern, row] : report.rows)
    rows.emplace_back(row, pattern);
  std::sort(rows.begin(), rows.end());
  out << "  row pattern";
  for (const auto &p : report.profiles)
    out << ' ' << p;
  out << '\n';
  for (const auto &[row, pattern] : rows) {
    out << "  " << row << ' ' << pattern;
    auto it = report.matrix.find(pattern);
    for (const auto &p : report.profiles) {
      bool d = it != report.matrix.end() && it->second.count(p) &&
               it->second.at(p);
      out << ' ' << (d ? "yes" : "no");
    }
    out << '\n';
  }

  out << "\nConfusion\n";
  for (const auto &p : report.profiles) {
    auto it = report.confusion.find(p);
    ConfusionMatrix cm = it == report.confusion.end() ? ConfusionMatrix{}
                                                      : it->second;
    out << "  " << p << ": TP " << cm.tp << " FP " << cm.fp << " FN "
        << cm.fn << " TN " << cm.tn << '\n';
  }
  out << '\n'
      << (failed == 0 ? "all " + std::to_string(report.results.size()) +
                            " checks passed"
                      : std::to_string(failed) + " of " +
                            std::to_string(report.results.size()) +
                            " checks failed")
      << '\n';
  return out.str();
}

} // namespace memlab
