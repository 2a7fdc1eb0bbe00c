#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace oracle {

std::string source_dir() {
  if (const char *env = std::getenv("MEMLAB_SOURCE_DIR"))
    return env;
  return MEMLAB_SOURCE_DIR;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int count_tokens_by_walk(const std::string &text) {
  static const std::vector<std::string> pairs = {
      "->", "==", "!=", "<=", ">=", "&&", "||", "++", "--",
      "+=", "-=", "*=", "/=", "%=", "<<", ">>", "&=", "|="};
  int count = 0;
  std::size_t i = 0;
  bool line_start = true;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '\n') {
      line_start = true;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      while (i < n && text[i] != '\n')
        ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '*') {
      i += 2;
      while (i + 1 < n && !(text[i] == '*' && text[i + 1] == '/'))
        ++i;
      i += 2;
      continue;
    }
    ++count;
    if (c == '#' && line_start) {
      while (i < n && text[i] != '\n')
        ++i;
      continue;
    }
    line_start = false;
    if (c == '"' || c == '\'') {
      ++i;
      while (i < n && text[i] != c) {
        if (text[i] == '\\')
          ++i;
        ++i;
      }
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                       text[i] == '_'))
        ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < n && std::isalnum(static_cast<unsigned char>(text[i])))
        ++i;
      continue;
    }
    bool two = false;
    for (const auto &p : pairs)
      if (text.compare(i, 2, p) == 0)
        two = true;
    i += two ? 2 : 1;
  }
  return count;
}

namespace {

std::uint64_t walk_from(const memlab::Cfg &cfg, int node) {
  if (node == cfg.exit)
    return 1;
  std::uint64_t total = 0;
  for (const auto &e : cfg.edges)
    if (e.from == node && e.kind != memlab::EdgeKind::LoopBack)
      total += walk_from(cfg, e.to);
  return total;
}

} // namespace

std::uint64_t walk_paths(const memlab::Cfg &cfg) {
  return walk_from(cfg, cfg.entry);
}

StraightLineProgram random_straight_line(std::mt19937 &rng) {
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const int vars = pick(2, 4);
  const int length = pick(3, 14);

  std::vector<std::string> lines = {"#include <stdlib.h>", "",
                                    "int main(){"};
  for (int v = 0; v < vars; ++v)
    lines.push_back("\tint *p" + std::to_string(v) + " = NULL;");

  std::vector<int> var(vars, -1); // block id or -1 for NULL
  std::vector<bool> freed;
  std::set<int> reported;
  std::vector<int> leaks;
  int mallocs = 0, frees = 0;

  auto collect = [&](int line) {
    for (int b = 0; b < static_cast<int>(freed.size()); ++b) {
      if (freed[b] || reported.count(b))
        continue;
      if (std::find(var.begin(), var.end(), b) == var.end()) {
        reported.insert(b);
        leaks.push_back(line);
      }
    }
  };

  for (int s = 0; s < length; ++s) {
    const int v = pick(0, vars - 1);
    const std::string name = "p" + std::to_string(v);
    std::string stmt;
    switch (pick(0, 3)) {
    case 0:
      if (mallocs == 6)
        continue;
      ++mallocs;
      stmt = name + " = malloc(4);";
      freed.push_back(false);
      var[v] = static_cast<int>(freed.size()) - 1;
      break;
    case 1:
      if (frees == 6 || (var[v] >= 0 && freed[var[v]]))
        continue;
      ++frees;
      stmt = "free(" + name + ");";
      if (var[v] >= 0)
        freed[var[v]] = true;
      break;
    case 2: {
      const int w = pick(0, vars - 1);
      if (w == v)
        continue;
      stmt = name + " = p" + std::to_string(w) + ";";
      var[v] = var[w];
      break;
    }
    default:
      stmt = name + " = NULL;";
      var[v] = -1;
      break;
    }
    lines.push_back("\t" + stmt);
    collect(static_cast<int>(lines.size()));
  }
  lines.push_back("\treturn 0;");
  const int ret = static_cast<int>(lines.size());
  std::fill(var.begin(), var.end(), -1);
  collect(ret);
  lines.push_back("}");

  StraightLineProgram out;
  for (const auto &l : lines)
    out.text += l + "\n";
  std::sort(leaks.begin(), leaks.end());
  out.leak_lines = std::move(leaks);
  return out;
}

RandomClassification random_classification(std::mt19937 &rng) {
  using memlab::Kind;
  static const std::vector<std::string> files = {"a.c", "b.c"};
  static const std::vector<Kind> kinds = {
      Kind::NullDereference, Kind::MemoryLeak, Kind::DeadStore,
      Kind::InvalidFree, Kind::Unmapped};
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  RandomClassification out;
  out.tolerance = pick(0, 2);
  std::set<std::tuple<std::string, int, Kind>> seen;
  const int n = pick(0, 12);
  for (int i = 0; i < n; ++i) {
    memlab::GroundTruthEntry e;
    e.file = files[pick(0, 1)];
    e.line = pick(1, 15);
    e.kind = kinds[pick(0, 4)];
    e.is_real = pick(0, 1) == 1;
    e.introduced_version = "1";
    if (!seen.insert({e.file, e.line, e.kind}).second)
      continue;
    out.truth.push_back(e);
  }
  const int m = pick(0, 12);
  for (int i = 0; i < m; ++i) {
    memlab::Finding f;
    f.file = files[pick(0, 1)];
    f.line = pick(1, 15);
    f.kind = kinds[pick(0, 4)];
    f.checker = "random";
    out.findings.push_back(f);
  }
  return out;
}

memlab::ConfusionMatrix reference_matrix(const RandomClassification &c) {
  memlab::ConfusionMatrix m;
  std::vector<bool> claimed(c.truth.size(), false);
  for (const auto &f : c.findings) {
    if (f.kind == memlab::Kind::Unmapped)
      continue;
    int best = -1;
    for (std::size_t i = 0; i < c.truth.size(); ++i) {
      const auto &e = c.truth[i];
      if (e.kind == memlab::Kind::Unmapped || e.file != f.file ||
          e.kind != f.kind || std::abs(e.line - f.line) > c.tolerance)
        continue;
      if (best < 0) {
        best = static_cast<int>(i);
        continue;
      }
      const auto &b = c.truth[best];
      const int d = std::abs(e.line - f.line), bd = std::abs(b.line - f.line);
      if (d < bd || (d == bd && e.line < b.line))
        best = static_cast<int>(i);
    }
    if (best < 0 || claimed[best]) {
      ++m.fp;
      continue;
    }
    claimed[best] = true;
    if (c.truth[best].is_real)
      ++m.tp;
    else
      ++m.fp;
  }
  for (std::size_t i = 0; i < c.truth.size(); ++i) {
    if (claimed[i] || c.truth[i].kind == memlab::Kind::Unmapped)
      continue;
    if (c.truth[i].is_real)
      ++m.fn;
    else
      ++m.tn;
  }
  return m;
}

} // namespace oracle
