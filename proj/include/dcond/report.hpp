#pragma once

#include <json.hpp>

#include "dcond/conditions.hpp"

namespace dcond {

using Json = nlohmann::ordered_json;

// One check run: parse the input, evaluate the requested conditions with the
// direct procedures, close under the implication lattice, and assemble a
// deterministic report.
struct CheckSpec {
  std::vector<std::string> vars;
  std::string poly;                   // single polynomial, or
  std::vector<std::string> factors;   // explicit factorization
  std::vector<std::string> conditions;
  unsigned long long maxSteps = 1'000'000;
  long timeoutSeconds = 60;
};

struct CheckOutcome {
  int exitCode = 0;  // 0 decided, 2 some unknown, 1 usage/internal error
  Json json;
  std::string error;  // set when exitCode == 1
};

CheckOutcome run_check(const CheckSpec& spec);

Json verdict_to_json(const Verdict& v);
std::string render_text(const Json& report);

// Reject variable names that collide with the reserved internal ones
// (s, t, d<k>, xi<k>, eta<k>, lam..., @...).
void validate_var_names(const std::vector<std::string>& names);

inline const char* dcond_version() { return "dcond 0.1.0"; }

}  // namespace dcond
