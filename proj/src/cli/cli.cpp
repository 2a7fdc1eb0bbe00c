//===-- cli.cpp - Command-line driver -------------------------------------===//
//
// SPDX-License-Identifier: Apache-2.0
//
//===----------------------------------------------------------------------===//

#include "memlab/cli.hpp"

#include "memlab/analysis.hpp"
#include "memlab/corpus.hpp"
#include "memlab/diagnostics.hpp"
#include "memlab/ingest.hpp"
#include "memlab/lexer.hpp"
#include "memlab/metrics.hpp"
#include "memlab/parser.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

namespace memlab {

std::map<std::string, std::string> parse_config_file(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int n = 0;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
      return std::string();
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++n;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty())
      continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("config line " + std::to_string(n) + ": expected key = value");
    out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return out;
}

namespace {

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open `" + path + "`");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',' || c == ' ') {
      if (!cur.empty())
        out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

/// Settings shared by analyze and bench, before precedence is applied.
struct CommonFlags {
  std::string profile;
  std::vector<std::string> enable;
  std::vector<std::string> disable;
  std::string format;
  std::string config_path;
  long path_budget = -1;
  int unroll = -1;
  int jobs = 0;
  bool timings = false;
  bool emulate_table = false;
};

struct Resolved {
  CheckerConfig config;
  AnalysisOptions options;
  std::string format = "text";
  int jobs = 1;
};

Resolved resolve(const CommonFlags &f) {
  std::map<std::string, std::string> file;
  if (!f.config_path.empty())
    file = parse_config_file(read_file(f.config_path));
  for (const auto &[key, value] : file) {
    static const std::set<std::string> known = {
        "profile", "enable", "disable", "format", "path_budget",
        "unroll",  "jobs",   "emulate_table"};
    if (!known.count(key))
      throw Error("unknown config key `" + key + "`");
  }

  Resolved r;
  std::string profile = "union";
  if (const char *env = std::getenv("MEMLAB_PROFILE"); env && *env)
    profile = env;
  if (file.count("profile"))
    profile = file["profile"];
  if (!f.profile.empty())
    profile = f.profile;
  r.config = make_profile(profile);

  auto checker = [](const std::string &token) {
    auto id = checker_from_token(token);
    if (!id)
      throw UnknownChecker(token);
    return *id;
  };
  std::vector<CheckerId> enable, disable;
  for (const auto &t : split_list(file.count("enable") ? file["enable"] : ""))
    enable.push_back(checker(t));
  for (const auto &t : split_list(file.count("disable") ? file["disable"] : ""))
    disable.push_back(checker(t));
  for (const auto &t : f.enable)
    enable.push_back(checker(t));
  for (const auto &t : f.disable)
    disable.push_back(checker(t));

  bool emulate = f.emulate_table;
  if (file.count("emulate_table"))
    emulate = emulate || file["emulate_table"] == "true";
  if (emulate)
    apply_table_emulation(r.config);
  for (CheckerId id : enable)
    r.config.enable(id);
  for (CheckerId id : disable)
    r.config.disable(id);

  if (file.count("format"))
    r.format = file["format"];
  if (!f.format.empty())
    r.format = f.format;
  if (r.format != "text" && r.format != "structured")
    throw Error("unknown format `" + r.format + "`");

  auto number = [](const std::string &key, const std::string &v) {
    try {
      std::size_t used = 0;
      long n = std::stol(v, &used);
      if (used != v.size() || n < 0)
        throw Error("");
      return n;
    } catch (...) {
      throw Error("config key `" + key + "` needs a non-negative integer");
    }
  };
  if (file.count("path_budget"))
    r.options.path_budget = number("path_budget", file["path_budget"]);
  if (file.count("unroll"))
    r.options.unroll_bound = static_cast<int>(number("unroll", file["unroll"]));
  if (file.count("jobs"))
    r.jobs = static_cast<int>(number("jobs", file["jobs"]));
  if (f.path_budget >= 0)
    r.options.path_budget = static_cast<std::size_t>(f.path_budget);
  if (f.unroll >= 0)
    r.options.unroll_bound = f.unroll;
  if (f.jobs > 0)
    r.jobs = f.jobs;
  r.jobs = std::max(1, r.jobs);
  return r;
}

void add_common(CLI::App *cmd, CommonFlags &f) {
  cmd->add_option("--profile", f.profile,
                  "Checker profile: union, infer-like, cppcheck-like, "
                  "clang-like, predator-like");
  cmd->add_option("--enable", f.enable, "Enable a checker (repeatable)");
  cmd->add_option("--disable", f.disable, "Disable a checker (repeatable)");
  cmd->add_option("--config", f.config_path, "key = value configuration file");
  cmd->add_option("--path-budget", f.path_budget,
                  "Completed paths per function before joining states");
  cmd->add_option("--unroll", f.unroll, "Back-edge traversals per loop");
  cmd->add_option("--jobs,-j", f.jobs, "Worker threads");
  cmd->add_flag("--timings", f.timings, "Print per-unit timings to stderr");
}

struct UnitOutcome {
  std::vector<Finding> findings;
  bool incomplete = false;
  std::vector<std::string> warnings;
  std::string error;
  double seconds = 0;
};

UnitOutcome analyze_one(const std::string &path, const Resolved &r) {
  UnitOutcome u;
  const auto start = std::chrono::steady_clock::now();
  try {
    AnalysisResult a = analyze_file(path, r.config, r.options);
    u.findings = std::move(a.findings);
    u.incomplete = a.incomplete;
    u.warnings = std::move(a.warnings);
  } catch (const std::exception &e) {
    u.error = e.what();
  }
  u.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return u;
}

int cmd_analyze(const std::vector<std::string> &paths, const CommonFlags &f,
                std::ostream &out, std::ostream &err) {
  Resolved r = resolve(f);
  std::vector<UnitOutcome> units(paths.size());
  if (r.jobs == 1 || paths.size() < 2) {
    for (std::size_t i = 0; i < paths.size(); ++i)
      units[i] = analyze_one(paths[i], r);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < r.jobs; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < paths.size(); i = next++)
          units[i] = analyze_one(paths[i], r);
      });
    for (auto &t : pool)
      t.join();
  }

  bool failed = false;
  bool incomplete = false;
  std::vector<Finding> all;
  for (std::size_t i = 0; i < units.size(); ++i) {
    const auto &u = units[i];
    if (!u.error.empty()) {
      err << "memlab: " << paths[i] << ": " << u.error << '\n';
      failed = true;
      continue;
    }
    for (const auto &w : u.warnings)
      err << "memlab: warning: " << paths[i] << ": " << w << '\n';
    if (f.timings)
      err << "timing: " << paths[i] << ' ' << std::fixed
          << std::setprecision(3) << u.seconds << "s\n";
    incomplete |= u.incomplete;
    all.insert(all.end(), u.findings.begin(), u.findings.end());
  }
  Report report = make_report(std::move(all), incomplete);
  out << (r.format == "structured" ? emit_structured(report)
                                   : render_text(report));
  if (failed)
    return 2;
  return report.findings.empty() ? 0 : 1;
}

void print_classification(const Classification &c, std::ostream &out) {
  out << "kind TP FP FN TN\n";
  for (const auto &[kind, cm] : c.by_kind)
    out << to_token(kind) << ' ' << cm.tp << ' ' << cm.fp << ' ' << cm.fn
        << ' ' << cm.tn << '\n';
  out << "TOTAL " << c.total.tp << ' ' << c.total.fp << ' ' << c.total.fn
      << ' ' << c.total.tn << '\n';
  out << "UNMAPPED " << c.unmapped_total << '\n';
  if (c.total.total() > 0) {
    Rates rt = compute_rates(c.total);
    out << std::fixed << std::setprecision(4) << "rates tp " << rt.tp_rate
        << " fp " << rt.fp_rate << " fn " << rt.fn_rate << " tn "
        << rt.tn_rate << '\n';
  }
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app{"memlab: memory-error static analysis and analyzer "
               "benchmarking.\nSettings precedence: command-line flags > "
               "--config file > MEMLAB_PROFILE > the union profile."};
  app.require_subcommand(1);

  CommonFlags analyze_flags;
  std::vector<std::string> paths;
  auto *analyze = app.add_subcommand("analyze", "Analyze C source files");
  analyze->add_option("paths", paths, "Source files")->required();
  add_common(analyze, analyze_flags);
  analyze->add_option("--format", analyze_flags.format, "text or structured");
  analyze->add_flag("--emulate-table", analyze_flags.emulate_table,
                    "Reproduce the reference detection table for sizeof(*p) "
                    "allocations");

  CommonFlags bench_flags;
  std::vector<std::string> bench_profiles;
  std::string corpus_path, truth_path, ingested_path, ingested_format = "memlab",
                                                      tool, version;
  int tolerance = 0;
  bool exact_sizing = false;
  auto *bench = app.add_subcommand("bench", "Run the corpus or classify a "
                                            "report against ground truth");
  bench->add_option("--corpus", corpus_path, "Corpus manifest");
  bench->add_option("--profile", bench_profiles,
                    "Profiles to run (repeatable, default all)");
  bench->add_option("--jobs,-j", bench_flags.jobs, "Worker threads");
  bench->add_option("--disable", bench_flags.disable,
                    "Disable a checker in every profile (repeatable)");
  bench->add_option("--path-budget", bench_flags.path_budget,
                    "Completed paths per function");
  bench->add_option("--unroll", bench_flags.unroll,
                    "Back-edge traversals per loop");
  bench->add_flag("--exact-sizing", exact_sizing,
                  "Keep sizeof(*p) allocations in every profile instead of "
                  "reproducing the reference detection table");
  bench->add_option("--truth", truth_path, "Ground-truth manifest");
  bench->add_option("--ingested", ingested_path, "Report to classify");
  bench->add_option("--format", ingested_format,
                    "Report format: infer, cppcheck, predator, memlab");
  bench->add_option("--tool", tool, "Tool whose omitted counts apply");
  bench->add_option("--tolerance", tolerance, "Line-match tolerance");
  bench->add_option("--version", version, "Program version to classify at");

  std::string ingest_path, ingest_format;
  auto *ingest = app.add_subcommand("ingest", "Normalize an external report");
  ingest->add_option("report", ingest_path, "Report file")->required();
  ingest->add_option("--format", ingest_format,
                     "infer, cppcheck, predator or memlab")
      ->required();

  std::vector<std::string> dates;
  std::string persist_truth;
  auto *persist = app.add_subcommand(
      "persistence", "Months between introduction and fix dates");
  persist->add_option("dates", dates, "Introduced and fixed date")
      ->expected(0, 2);
  persist->add_option("--truth", persist_truth, "Ground-truth manifest");

  std::vector<std::string> argv_store{"memlab"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char *> argv;
  for (auto &s : argv_store)
    argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze)
      return cmd_analyze(paths, analyze_flags, out, err);

    if (*bench) {
      if (!corpus_path.empty()) {
        CorpusManifest m = load_corpus_manifest(corpus_path);
        BenchOptions opts;
        opts.emulate_reference_table = !exact_sizing;
        opts.jobs = std::max(1, bench_flags.jobs);
        if (bench_flags.path_budget >= 0)
          opts.analysis.path_budget = bench_flags.path_budget;
        if (bench_flags.unroll >= 0)
          opts.analysis.unroll_bound = bench_flags.unroll;
        for (const auto &t : bench_flags.disable) {
          auto id = checker_from_token(t);
          if (!id)
            throw UnknownChecker(t);
          opts.disable.push_back(*id);
        }
        std::vector<std::string> profiles =
            bench_profiles.empty() ? profile_names() : bench_profiles;
        BenchReport report = run_corpus(m, profiles, opts);
        out << render_bench(report);
        return report.all_passed ? 0 : 1;
      }
      if (!truth_path.empty()) {
        TruthManifest m = load_truth_manifest(truth_path);
        std::vector<Finding> findings;
        if (!ingested_path.empty()) {
          auto fmt = format_from_name(ingested_format);
          if (!fmt)
            throw Error("unknown format `" + ingested_format + "`");
          findings = ingest_report(read_file(ingested_path), *fmt).findings;
        }
        ClassifyOptions opts;
        opts.tolerance = tolerance;
        if (!version.empty())
          opts.version = version;
        if (!tool.empty())
          opts.tool = tool;
        normalize_findings(findings);
        Classification c = classify(findings, m, opts);
        out << "program " << m.program << '\n';
        print_classification(c, out);
        return 0;
      }
      err << "memlab: bench needs --corpus or --truth\n";
      return 2;
    }

    if (*ingest) {
      auto fmt = format_from_name(ingest_format);
      if (!fmt) {
        err << "memlab: unknown format `" << ingest_format << "`\n";
        return 2;
      }
      ExternalReport r = ingest_report(read_file(ingest_path), *fmt);
      for (const auto &f : r.findings)
        out << to_structured_line(f) << '\n';
      return 0;
    }

    if (*persist) {
      if (!persist_truth.empty()) {
        TruthManifest m = load_truth_manifest(persist_truth);
        for (const auto &e : m.entries) {
          if (!e.introduced_date || !e.fixed_date)
            continue;
          out << e.file << ':' << e.line << ' ' << to_token(e.kind) << ' '
              << format_date(*e.introduced_date) << ' '
              << format_date(*e.fixed_date) << ' '
              << compute_persistence(*e.introduced_date, *e.fixed_date)
                     .to_string()
              << '\n';
        }
        return 0;
      }
      if (dates.size() != 2) {
        err << "memlab: persistence needs two dates or --truth\n";
        return 2;
      }
      auto a = parse_date(dates[0]);
      auto b = parse_date(dates[1]);
      if (!a || !b) {
        err << "memlab: dates must be YYYY-MM-DD or DD/MM/YYYY\n";
        return 2;
      }
      out << compute_persistence(*a, *b).to_string() << '\n';
      return 0;
    }
  } catch (const FormatError &e) {
    err << "memlab: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    err << "memlab: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

} // namespace memlab
