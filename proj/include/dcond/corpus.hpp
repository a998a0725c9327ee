#pragma once

#include <string>
#include <vector>

#include "dcond/report.hpp"

namespace dcond {

// One fixture stanza: declared variables, a polynomial or factor list, and
// expected verdicts per condition.
struct Fixture {
  std::string id;
  std::string file;
  std::vector<std::string> vars;
  std::string poly;
  std::vector<std::string> factors;
  std::map<std::string, std::string> expect;  // condition -> holds|fails|unknown
  std::string weights;                        // documentation only
  unsigned long long maxSteps = 1'000'000;
};

std::vector<Fixture> parse_fixture_file(const std::string& path);
std::vector<Fixture> load_fixture_dir(const std::string& dir);

struct FixtureResult {
  std::string id;
  bool passed = false;
  std::vector<std::string> mismatches;
  Json report;
};

// Independent fixtures run in an OpenMP worker pool; results are aggregated
// in fixture order.
std::vector<FixtureResult> run_corpus(const std::vector<Fixture>& fixtures,
                                      long timeoutSeconds);

}  // namespace dcond
