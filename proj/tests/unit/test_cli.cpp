#include "oracles.hpp"

#include "memlab/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = memlab::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string &name) {
  return oracle::source_dir() + "/corpus/" + name;
}

int count(const std::string &hay, const std::string &needle) {
  int n = 0;
  for (auto p = hay.find(needle); p != std::string::npos;
       p = hay.find(needle, p + 1))
    ++n;
  return n;
}

fs::path temp_file(const std::string &name, const std::string &text) {
  const fs::path p = fs::temp_directory_path() / ("memlab_cli_" + name);
  std::ofstream(p) << text;
  return p;
}

struct EnvGuard {
  explicit EnvGuard(const char *value) {
    if (value)
      setenv("MEMLAB_PROFILE", value, 1);
    else
      unsetenv("MEMLAB_PROFILE");
  }
  ~EnvGuard() { unsetenv("MEMLAB_PROFILE"); }
};

} // namespace

TEST_CASE("analyze reports findings with exit status 1") {
  EnvGuard env(nullptr);
  const auto r = run({"analyze", corpus("dead_store_tp.c")});
  CHECK(r.code == 1);
  CHECK(count(r.out, "DEAD_STORE") == 2); // record and summary
  CHECK(r.out.rfind("Found 1 issue\n", 0) == 0);
}

TEST_CASE("clean file exits 0") {
  EnvGuard env(nullptr);
  const auto r = run({"analyze", corpus("null_deref_fixed.c")});
  CHECK(r.code == 0);
  CHECK(r.out == "Found 0 issues\n");
}

TEST_CASE("usage errors exit 2") {
  EnvGuard env(nullptr);
  CHECK(run({"analyze", "/nonexistent/file.c"}).code == 2);
  CHECK(run({"analyze", "--profile", "nope", corpus("dead_store_tp.c")}).code ==
        2);
  CHECK(run({"analyze", "--enable", "NOPE", corpus("dead_store_tp.c")}).code ==
        2);
  CHECK(run({}).code == 2);
  CHECK(run({"bench"}).code == 2);
}

TEST_CASE("structured output") {
  EnvGuard env(nullptr);
  const auto r = run(
      {"analyze", "--format", "structured", corpus("leak_realloc.c")});
  CHECK(r.code == 1);
  CHECK(count(r.out, "\n") == 1);
  CHECK(r.out.find("\"kind\":\"MEMORY_LEAK\"") != std::string::npos);
  CHECK(r.out.find("\"line\":14") != std::string::npos);
}

TEST_CASE("bench over the corpus") {
  const auto ok = run({"bench", "--corpus", corpus("manifest.ndjson")});
  CHECK(ok.code == 0);

  const fs::path dir = fs::temp_directory_path() / "memlab_cli_corpus";
  fs::create_directories(dir);
  fs::copy_file(corpus("null_deref_fixed.c"), dir / "null_deref_fixed.c",
                fs::copy_options::overwrite_existing);
  fs::copy_file(corpus("null_deref_tp.c"), dir / "null_deref_tp.c",
                fs::copy_options::overwrite_existing);
  // Buggy and fixed swapped.
  std::ofstream(dir / "manifest.ndjson")
      << "{\"fixture\":\"null_deref_fixed.c\",\"fixed\":\"null_deref_tp.c\","
         "\"pattern\":\"swapped\",\"row\":0,\"expected\":[{\"line\":13,"
         "\"kind\":\"NULL_DEREFERENCE\"}],\"profiles\":{\"union\":true}}\n";
  const auto bad = run({"bench", "--corpus", (dir / "manifest.ndjson").string(),
                        "--profile", "union"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("null_deref_fixed.c") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("bench against ground truth") {
  const std::string root = oracle::source_dir() + "/data/";
  const auto r =
      run({"bench", "--truth", root + "truth/sds.manifest", "--ingested",
           root + "reports/sds-infer.ndjson", "--tool", "infer"});
  CHECK(r.code == 0);
  CHECK(r.out.find("NULL_DEREFERENCE 4 0") != std::string::npos);
}

TEST_CASE("ingest") {
  const std::string reports = oracle::source_dir() + "/corpus/reports/";
  const auto r = run({"ingest", "--format", "cppcheck",
                      reports + "cppcheck_leak_realloc.txt"});
  CHECK(r.code == 0);
  CHECK(count(r.out, "\n") == 1);
  CHECK(r.out.find("\"line\":14") != std::string::npos);

  const auto empty = temp_file("empty.txt", "");
  CHECK(run({"ingest", "--format", "infer", empty.string()}).code == 0);
  fs::remove(empty);

  const auto wrong = run({"ingest", "--format", "predator",
                          reports + "infer_dead_store_null_init.txt"});
  CHECK(wrong.code == 2);
  CHECK_FALSE(wrong.err.empty());
  CHECK(run({"ingest", "--format", "clang",
             reports + "infer_dead_store_null_init.txt"})
            .code == 2);
}

TEST_CASE("settings precedence") {
  const std::string file = corpus("dead_store_tp.c");
  {
    EnvGuard env("cppcheck-like");
    CHECK(run({"analyze", file}).code == 0);
    CHECK(run({"analyze", "--profile", "union", file}).code == 1);
    const auto cfg = temp_file("union.cfg", "# comment\nprofile = union\n");
    CHECK(run({"analyze", "--config", cfg.string(), file}).code == 1);
    CHECK(run({"analyze", "--config", cfg.string(), "--profile",
               "cppcheck-like", file})
              .code == 0);
    fs::remove(cfg);
  }
  {
    EnvGuard env(nullptr);
    const auto cfg = temp_file("off.cfg", "disable = DEAD_STORE\n");
    CHECK(run({"analyze", "--config", cfg.string(), file}).code == 0);
    fs::remove(cfg);
    const auto bad = temp_file("bad.cfg", "colour = blue\n");
    CHECK(run({"analyze", "--config", bad.string(), file}).code == 2);
    fs::remove(bad);
  }
}

TEST_CASE("config file parsing") {
  const auto m = memlab::parse_config_file(
      "# header\nprofile = clang-like  # trailing\n\n  jobs=4\n");
  CHECK(m.at("profile") == "clang-like");
  CHECK(m.at("jobs") == "4");
  CHECK(m.size() == 2);
}

TEST_CASE("persistence") {
  auto r = run({"persistence", "2014-02-06", "2014-11-25"});
  CHECK(r.code == 0);
  CHECK(r.out == "9\n");
  r = run({"persistence", "25/07/2015", "29/07/2015"});
  CHECK(r.out == "0.13\n");
  CHECK(run({"persistence", "2014-02-06"}).code == 2);
  CHECK(run({"persistence", "2015-01-02", "2015-01-01"}).code == 2);
  r = run({"persistence", "--truth",
           oracle::source_dir() + "/data/truth/sds.manifest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("sds.c:159 MEMORY_LEAK 2014-02-06 2014-11-25 9\n") !=
        std::string::npos);
}
