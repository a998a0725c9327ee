#include "dcond/report.hpp"

#include <algorithm>
#include <cctype>

#include "dcond/parse.hpp"

namespace dcond {

namespace {

bool reserved_name(const std::string& n) {
  if (n == "s" || n == "t" || n == "lam" || n == "lambda") return true;
  if (!n.empty() && n[0] == '@') return true;
  auto starts = [&](const char* p) {
    size_t l = std::strlen(p);
    if (n.size() <= l || n.compare(0, l, p) != 0) return false;
    for (size_t i = l; i < n.size(); ++i)
      if (!std::isdigit(uint8_t(n[i]))) return false;
    return true;
  };
  return starts("d") || starts("xi") || starts("eta") || starts("mu");
}

struct DirectResults {
  std::map<std::string, Verdict> byName;   // requested-name -> verdict
  std::optional<BFunction> bRoots;
  std::optional<FreenessCertificate> freeCert;
  std::optional<MembershipCertificate> hCert;
};

}  // namespace

void validate_var_names(const std::vector<std::string>& names) {
  for (auto& n : names) {
    if (n.empty()) throw std::invalid_argument("empty variable name");
    if (!std::isalpha(uint8_t(n[0])) && n[0] != '_')
      throw std::invalid_argument("variable name must start with a letter: " + n);
    for (char c : n)
      if (!std::isalnum(uint8_t(c)) && c != '_')
        throw std::invalid_argument("bad character in variable name: " + n);
    if (reserved_name(n))
      throw std::invalid_argument("variable name '" + n +
                                  "' is reserved for internal symbols");
  }
}

Json verdict_to_json(const Verdict& v) {
  Json out;
  out["verdict"] = to_string(v.state);
  if (!v.reason.empty()) out["reason"] = v.reason;
  Json steps = Json::array();
  for (auto& st : v.trace) {
    Json s;
    s["rule"] = st.rule;
    s["detail"] = st.detail;
    steps.push_back(std::move(s));
  }
  out["trace"] = std::move(steps);
  return out;
}

CheckOutcome run_check(const CheckSpec& spec) {
  CheckOutcome out;
  try {
    validate_var_names(spec.vars);
    if (spec.vars.empty()) throw std::invalid_argument("no variables declared");
    RingPtr ring = Ring::poly_ring(spec.vars);

    if (!spec.poly.empty() && !spec.factors.empty())
      throw std::invalid_argument("give either --poly or --factor, not both");
    std::vector<Poly> factors;
    Poly h(ring);
    if (!spec.factors.empty()) {
      for (auto& t : spec.factors) factors.push_back(parse_poly(t, ring));
      h = Poly::constant(ring, Rational(1));
      for (auto& f : factors) h = h * f;
    } else if (!spec.poly.empty()) {
      h = parse_poly(spec.poly, ring);
      factors = {h};
    } else {
      throw std::invalid_argument("need --poly or --factor");
    }
    if (h.is_zero()) throw std::invalid_argument("zero input polynomial");
    if (h.constant_term() != 0)
      throw std::invalid_argument("input must vanish at the origin");

    GroebnerOptions gopt;
    gopt.max_steps = spec.maxSteps;
    if (spec.timeoutSeconds > 0)
      gopt.deadline = std::chrono::steady_clock::now() +
                      std::chrono::seconds(spec.timeoutSeconds);

    // direct procedures for the requested conditions
    DirectResults direct;
    bool limitHit = false;
    auto note_limit = [&](const Verdict& v) {
      if (v.unknown() && v.reason.find("budget") != std::string::npos)
        limitHit = true;
      if (v.unknown() && v.reason.find("timeout") != std::string::npos)
        limitHit = true;
    };

    for (auto& nameRaw : spec.conditions) {
      std::string name;
      for (char c : nameRaw) name += char(std::toupper(uint8_t(c)));
      if (direct.byName.count(name)) continue;
      Verdict v = Verdict::make_unknown("no direct decision procedure");
      if (name == "H") {
        v = condition_H(h, gopt);
      } else if (name == "B") {
        BOptions bopt;
        bopt.groebner = gopt;
        BVerdict bv = decide_B(factors, bopt);
        v = bv.verdict;
        direct.bRoots = bv.roots;
      } else if (name == "L") {
        v = condition_L(h, gopt);
      } else if (name == "W") {
        v = condition_W(h, gopt);
      } else if (name == "A_INV" || name == "AINV") {
        v = decide_A_inv(factors, gopt);
      } else if (name == "KOSZUL" || name == "FREE") {
        FreeSearch fs = search_free_basis(h, gopt);
        if (name == "FREE") {
          if (fs.status == FreeSearch::Status::Found) {
            v = Verdict::make_holds("saito", "determinant = unit * h");
            direct.freeCert = fs.cert;
          } else if (fs.status == FreeSearch::Status::NotFree) {
            v = Verdict::make_fails("saito", "no generator subset is a basis");
          } else {
            v = Verdict::make_unknown("subset budget exhausted");
          }
        } else {
          if (fs.status == FreeSearch::Status::Found) {
            v = koszul_free_test(h, fs.cert->basis, gopt);
            direct.freeCert = fs.cert;
          } else if (fs.status == FreeSearch::Status::NotFree) {
            v = Verdict::make_fails("koszul", "not a free divisor");
          } else {
            v = Verdict::make_unknown("subset budget exhausted");
          }
        }
      } else if (name == "A" || name == "G" || name == "M" ||
                 name == "A_LOG" || name == "ALOG") {
        // lattice-only nodes
      } else {
        throw std::invalid_argument("unknown condition: " + nameRaw);
      }
      note_limit(v);
      direct.byName[name] = v;
    }

    // lattice closure over the paper conditions
    ConditionLattice lat;
    for (auto& [name, v] : direct.byName) {
      if (v.unknown()) continue;
      if (auto c = cond_from_name(name)) lat.seed(*c, v);
    }
    lat = propagate_implications(lat);

    Json verdicts;
    bool anyUnknown = false;
    for (auto& nameRaw : spec.conditions) {
      std::string name;
      for (char c : nameRaw) name += char(std::toupper(uint8_t(c)));
      Verdict v = direct.byName.at(name);
      if (v.unknown()) {
        if (auto cnd = cond_from_name(name)) {
          VerdictState latState = lat.state(*cnd);
          if (latState != VerdictState::Unknown) v = lat.verdicts.at(*cnd);
        }
      }
      anyUnknown = anyUnknown || v.unknown();
      Json vj = verdict_to_json(v);
      if (name == "B" && direct.bRoots)
        vj["certificate"] = Json{{"roots", direct.bRoots->to_string()}};
      if ((name == "FREE" || name == "KOSZUL") && direct.freeCert) {
        vj["certificate"] =
            Json{{"determinant", print_poly(direct.freeCert->determinant)},
                 {"unit", print_poly(direct.freeCert->unitWitness)}};
      }
      verdicts[name] = std::move(vj);
    }

    Json doc;
    Json input;
    input["vars"] = spec.vars;
    if (!spec.poly.empty()) input["poly"] = print_poly(h);
    if (!spec.factors.empty()) {
      Json fl = Json::array();
      for (auto& f : factors) fl.push_back(print_poly(f));
      input["factors"] = fl;
    }
    Json conds = Json::array();
    for (auto& c : spec.conditions) conds.push_back(c);
    input["conditions"] = conds;
    doc["input"] = std::move(input);
    doc["verdicts"] = std::move(verdicts);
    doc["limits"] = Json{{"max_steps", spec.maxSteps},
                         {"timeout_seconds", spec.timeoutSeconds},
                         {"limit_hit", limitHit}};
    doc["version"] = dcond_version();
    out.json = std::move(doc);
    out.exitCode = anyUnknown ? 2 : 0;
  } catch (const LatticeContradiction& e) {
    out.exitCode = 1;
    out.error = std::string("lattice contradiction: ") + e.what();
  } catch (const std::exception& e) {
    out.exitCode = 1;
    out.error = e.what();
  }
  return out;
}

namespace {

void render_generic(const Json& v, const std::string& indent, std::string& s) {
  if (v.is_object()) {
    for (auto& [k, val] : v.items()) {
      if (val.is_object() || val.is_array()) {
        s += indent + k + ":\n";
        render_generic(val, indent + "  ", s);
      } else {
        s += indent + k + ": " + (val.is_string() ? val.get<std::string>()
                                                  : val.dump()) + "\n";
      }
    }
  } else if (v.is_array()) {
    for (auto& val : v) {
      if (val.is_object() || val.is_array()) {
        s += indent + "-\n";
        render_generic(val, indent + "  ", s);
      } else {
        s += indent + "- " + (val.is_string() ? val.get<std::string>()
                                              : val.dump()) + "\n";
      }
    }
  }
}

}  // namespace

std::string render_text(const Json& report) {
  std::string s;
  if (report.contains("input")) {
    const Json& in = report["input"];
    if (in.contains("poly")) s += "input: " + in["poly"].get<std::string>() + "\n";
    if (in.contains("factors")) {
      s += "input factors:";
      for (auto& f : in["factors"]) s += " (" + f.get<std::string>() + ")";
      s += "\n";
    }
    if (in.contains("f")) s += "input f: " + in["f"].get<std::string>() + "\n";
  }
  if (report.contains("verdicts")) {
    for (auto& [name, v] : report["verdicts"].items()) {
      s += name + ": " + v["verdict"].get<std::string>();
      if (v.contains("reason")) s += "  [" + v["reason"].get<std::string>() + "]";
      s += "\n";
      for (auto& st : v["trace"])
        s += "    " + st["rule"].get<std::string>() + ": " +
             st["detail"].get<std::string>() + "\n";
      if (v.contains("certificate"))
        for (auto& [k, val] : v["certificate"].items())
          s += "    certificate " + k + ": " + val.get<std::string>() + "\n";
    }
    return s;
  }
  for (auto& [k, v] : report.items()) {
    if (k == "input" || k == "version") continue;
    if (v.is_object() || v.is_array()) {
      s += k + ":\n";
      render_generic(v, "  ", s);
    } else {
      s += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
  }
  return s;
}

}  // namespace dcond
