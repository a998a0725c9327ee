#include "dcond/corpus.hpp"

#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace dcond {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
    return s.substr(1, s.size() - 2);
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !out.empty()) out.push_back(trim(cur));
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

}  // namespace

std::vector<Fixture> parse_fixture_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture file: " + path);
  std::vector<Fixture> out;
  Fixture cur;
  bool open = false;
  std::string line;
  size_t lineno = 0;
  auto flush = [&] {
    if (open) out.push_back(cur);
    cur = Fixture{};
    cur.file = path;
  };
  cur.file = path;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      flush();
      cur.id = trim(t.substr(1, t.size() - 2));
      open = true;
      continue;
    }
    size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected key = value");
    std::string key = trim(t.substr(0, eq));
    std::string val = unquote(trim(t.substr(eq + 1)));
    if (!open)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": key outside a [case] stanza");
    if (key == "vars") {
      cur.vars = split(val, ',');
    } else if (key == "poly") {
      cur.poly = val;
    } else if (key == "factors") {
      cur.factors = split(val, '|');
    } else if (key == "max_steps") {
      cur.maxSteps = std::stoull(val);
    } else if (key == "weights") {
      cur.weights = val;
    } else if (key.rfind("expect.", 0) == 0) {
      std::string cond = key.substr(7);
      std::string u;
      for (char c : cond) u += char(std::toupper(uint8_t(c)));
      std::string v;
      for (char c : val) v += char(std::tolower(uint8_t(c)));
      if (v != "holds" && v != "fails" && v != "unknown")
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": expectation must be holds|fails|unknown");
      cur.expect[u] = v;
    } else {
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unknown key '" + key + "'");
    }
  }
  flush();
  return out;
}

std::vector<Fixture> load_fixture_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> paths;
  if (fs::is_regular_file(dir)) {
    paths.push_back(dir);
  } else {
    for (auto& e : fs::directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".toml")
        paths.push_back(e.path().string());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<Fixture> out;
  for (auto& p : paths)
    for (auto& f : parse_fixture_file(p)) out.push_back(f);
  return out;
}

std::vector<FixtureResult> run_corpus(const std::vector<Fixture>& fixtures,
                                      long timeoutSeconds) {
  std::vector<FixtureResult> results(fixtures.size());
#pragma omp parallel for schedule(dynamic) num_threads(kernels::threads())
  for (long i = 0; i < long(fixtures.size()); ++i) {
    const Fixture& fx = fixtures[i];
    FixtureResult r;
    r.id = fx.id;
    CheckSpec spec;
    spec.vars = fx.vars;
    spec.poly = fx.poly;
    spec.factors = fx.factors;
    spec.maxSteps = fx.maxSteps;
    spec.timeoutSeconds = timeoutSeconds;
    for (auto& [cond, want] : fx.expect) spec.conditions.push_back(cond);
    CheckOutcome oc = run_check(spec);
    if (oc.exitCode == 1) {
      r.passed = false;
      r.mismatches.push_back("error: " + oc.error);
    } else {
      r.report = oc.json;
      r.passed = true;
      for (auto& [cond, want] : fx.expect) {
        std::string got =
            oc.json["verdicts"][cond]["verdict"].get<std::string>();
        if (got != want) {
          r.passed = false;
          r.mismatches.push_back(cond + ": expected " + want + ", got " + got);
        }
      }
    }
    results[i] = std::move(r);
  }
  return results;
}

}  // namespace dcond
