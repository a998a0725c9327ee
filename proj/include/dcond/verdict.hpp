#pragma once

#include <string>
#include <vector>

namespace dcond {

enum class VerdictState { Holds, Fails, Unknown };

inline const char* to_string(VerdictState s) {
  switch (s) {
    case VerdictState::Holds: return "holds";
    case VerdictState::Fails: return "fails";
    default: return "unknown";
  }
}

// One applied rule with a human-readable witness or note.
struct TraceStep {
  std::string rule;
  std::string detail;
};

struct Verdict {
  VerdictState state = VerdictState::Unknown;
  std::string reason;  // populated for Unknown
  std::vector<TraceStep> trace;

  bool holds() const { return state == VerdictState::Holds; }
  bool fails() const { return state == VerdictState::Fails; }
  bool unknown() const { return state == VerdictState::Unknown; }

  Verdict& note(std::string rule, std::string detail) {
    trace.push_back({std::move(rule), std::move(detail)});
    return *this;
  }

  static Verdict make_holds(std::string rule, std::string detail) {
    Verdict v;
    v.state = VerdictState::Holds;
    v.note(std::move(rule), std::move(detail));
    return v;
  }
  static Verdict make_fails(std::string rule, std::string detail) {
    Verdict v;
    v.state = VerdictState::Fails;
    v.note(std::move(rule), std::move(detail));
    return v;
  }
  static Verdict make_unknown(std::string reason) {
    Verdict v;
    v.state = VerdictState::Unknown;
    v.reason = std::move(reason);
    return v;
  }
};

}  // namespace dcond
