// dcond: decide and certify the differential conditions (H, B, freeness,
// Koszul, L, W, A(1/h), ...) for polynomial hypersurface germs at the origin.
#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "dcond/corpus.hpp"
#include "dcond/parse.hpp"

using namespace dcond;

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(uint8_t(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<std::string> infer_vars(const std::vector<std::string>& texts) {
  std::vector<std::string> names;
  for (auto& t : texts) {
    for (size_t i = 0; i < t.size();) {
      if (std::isalpha(uint8_t(t[i])) || t[i] == '_') {
        std::string id;
        while (i < t.size() && (std::isalnum(uint8_t(t[i])) || t[i] == '_'))
          id += t[i++];
        if (std::find(names.begin(), names.end(), id) == names.end())
          names.push_back(id);
      } else {
        ++i;
      }
    }
  }
  return names;
}

RingPtr ring_from_vars(const std::string& vars) {
  auto names = split_csv(vars);
  validate_var_names(names);
  if (names.empty()) throw std::invalid_argument("no variables declared");
  return Ring::poly_ring(names);
}

int emit(const Json& doc, bool jsonMode, int code) {
  if (jsonMode)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << render_text(doc);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dcond: exact decision toolkit for differential conditions on "
               "hypersurface germs"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  // ---- check ----------------------------------------------------------
  auto* check = app.add_subcommand("check", "Decide conditions for a germ");
  std::string vars, poly, conditions;
  std::vector<std::string> factorArgs;
  unsigned long long maxSteps = 1'000'000;
  long timeout = 60;
  check->add_option("--vars", vars,
                    "Comma-separated variable names (inferred from the input "
                    "when omitted)");
  check->add_option("--poly", poly, "Input polynomial");
  check->add_option("--factor", factorArgs,
                    "Factor of the input (repeatable; preserves the "
                    "factorization)");
  check->add_option("--conditions", conditions,
                    "Comma-separated list: H,B,FREE,KOSZUL,L,W,A_INV,A,G,M,A_LOG")
      ->required();
  check->add_option("--max-steps", maxSteps, "Reduction step budget");
  check->add_option("--timeout", timeout, "Soft timeout per check (seconds)");

  // ---- bfun -----------------------------------------------------------
  auto* bfun = app.add_subcommand(
      "bfun", "Bounded functional-equation search b(s) m f^s = P m f^{s+1}");
  std::string bvars, bpoly, bnumer = "1";
  std::vector<std::string> bdens;
  int maxOrder = 3, maxCoeffDeg = 2, maxBDeg = 6;
  bfun->add_option("--vars", bvars, "Comma-separated variable names")->required();
  bfun->add_option("--poly", bpoly, "The twisting polynomial f")->required();
  bfun->add_option("--numer", bnumer, "Numerator of the section m");
  bfun->add_option("--den", bdens, "Denominator factor of m as poly:exp");
  bfun->add_option("--max-order", maxOrder, "Maximal operator order");
  bfun->add_option("--max-coeff-deg", maxCoeffDeg, "Maximal x-degree in P");
  bfun->add_option("--max-bdeg", maxBDeg, "Maximal degree of b");

  // ---- arrangement ----------------------------------------------------
  auto* arr = app.add_subcommand(
      "arrangement", "Annihilator generators of (1/h~) h_1^s and the "
                     "characteristic-variety ideal");
  std::string avars;
  std::vector<std::string> afactors;
  size_t distinguished = 1;
  bool withCharvar = false, derlogMode = false;
  std::string weightsArg;
  arr->add_option("--vars", avars, "Comma-separated variable names")->required();
  arr->add_option("--factor", afactors, "Arrangement factor (repeatable)")
      ->required();
  arr->add_option("--distinguished", distinguished,
                  "1-based index of the distinguished factor");
  arr->add_flag("--charvariety", withCharvar,
                "Also emit the characteristic-variety ideal");
  arr->add_flag("--derlog", derlogMode,
                "Emit the logarithmic-derivation generators instead "
                "(requires --weights)");
  arr->add_option("--weights", weightsArg,
                  "Comma-separated weights a1,a2,... for --derlog");

  // ---- verify-ann -----------------------------------------------------
  auto* ver = app.add_subcommand(
      "verify-ann", "Verify operators annihilate N f^s / (f^a prod g^e)");
  std::string vvars, vfs, vnumer = "1";
  int vfpow = 0;
  std::vector<std::string> vops, vdens;
  std::string atS;
  ver->add_option("--vars", vvars, "Comma-separated variable names")->required();
  ver->add_option("--op", vops,
                  "Operator (repeatable); d1..dn are the partials, s the "
                  "parameter")
      ->required();
  ver->add_option("--fs", vfs, "Twisting polynomial f of f^s")->required();
  ver->add_option("--numer", vnumer, "Numerator N(x, s)");
  ver->add_option("--fpow", vfpow, "Denominator exponent a of f^a");
  ver->add_option("--den", vdens, "Denominator factor as poly:exp (repeatable)");
  ver->add_option("--at-s", atS, "Substitute a rational value for s first");

  // ---- conormal -------------------------------------------------------
  auto* con = app.add_subcommand("conormal",
                                 "Conormal ideal of f (optionally relative to "
                                 "constraints) by elimination");
  std::string cvars, cpoly;
  std::vector<std::string> crel;
  con->add_option("--vars", cvars, "Comma-separated variable names")->required();
  con->add_option("--poly", cpoly, "Input polynomial")->required();
  con->add_option("--relative", crel, "Constraint polynomial (repeatable)");

  // ---- corpus ---------------------------------------------------------
  auto* cor = app.add_subcommand("corpus", "Run a fixture corpus");
  std::string corpusPath;
  long corTimeout = 60;
  int threads = 0;
  cor->add_option("path", corpusPath, "Fixture file or directory")->required();
  cor->add_option("--timeout", corTimeout, "Soft timeout per fixture (seconds)");
  cor->add_option("--threads", threads, "Worker threads (0 = default)");

  CLI11_PARSE(app, argc, argv);
  bool jsonMode = format == "json";

  try {
    if (*check) {
      CheckSpec spec;
      spec.vars = split_csv(vars);
      if (spec.vars.empty()) {
        std::vector<std::string> texts = factorArgs;
        if (!poly.empty()) texts.push_back(poly);
        spec.vars = infer_vars(texts);
      }
      spec.poly = poly;
      spec.factors = factorArgs;
      spec.conditions = split_csv(conditions);
      spec.maxSteps = maxSteps;
      spec.timeoutSeconds = timeout;
      CheckOutcome oc = run_check(spec);
      if (oc.exitCode == 1) {
        std::cerr << "error: " << oc.error << "\n";
        return 1;
      }
      return emit(oc.json, jsonMode, oc.exitCode);
    }

    if (*bfun) {
      RingPtr ring = ring_from_vars(bvars);
      Poly f = parse_poly(bpoly, ring);
      Poly numer = parse_poly(bnumer, ring);
      std::vector<std::pair<Poly, int>> dens;
      for (auto& d : bdens) {
        size_t colon = d.rfind(':');
        std::string ptext = colon == std::string::npos ? d : d.substr(0, colon);
        int e = colon == std::string::npos ? 1 : std::stoi(d.substr(colon + 1));
        dens.emplace_back(parse_poly(ptext, ring), e);
      }
      auto eq = solve_functional_equation(f, numer, dens, maxOrder, maxCoeffDeg,
                                          maxBDeg);
      Json doc;
      doc["input"] = Json{{"f", print_poly(f)}, {"numer", print_poly(numer)}};
      if (!eq) {
        doc["found"] = false;
        doc["version"] = dcond_version();
        emit(doc, jsonMode, 0);
        if (!jsonMode) std::cout << "no equation within the bounds\n";
        return 2;
      }
      doc["found"] = true;
      doc["b"] = eq->b.to_string();
      Json roots = Json::array();
      for (auto& [r, m] : eq->b.roots)
        roots.push_back(Json{{"root", rat_to_string(r)}, {"multiplicity", m}});
      doc["roots"] = roots;
      doc["operator"] = print_weyl_op(eq->P);
      doc["verified"] = true;  // solve_functional_equation re-verifies exactly
      doc["version"] = dcond_version();
      return emit(doc, jsonMode, 0);
    }

    if (*arr) {
      RingPtr ring = ring_from_vars(avars);
      std::vector<Poly> factors;
      for (auto& t : afactors) factors.push_back(parse_poly(t, ring));
      if (distinguished < 1 || distinguished > factors.size())
        throw std::invalid_argument("--distinguished out of range");
      size_t dist = distinguished - 1;
      Json doc;
      Json gens = Json::array();
      if (derlogMode) {
        if (weightsArg.empty())
          throw std::invalid_argument("--derlog requires --weights");
        WeightSystem w;
        for (auto& t : split_csv(weightsArg))
          w.alpha.push_back(rat_from_string(t));
        if (w.alpha.size() != ring->size())
          throw std::invalid_argument("need one weight per variable");
        for (auto& op : arrangement_derlog_generators(factors, dist, w))
          gens.push_back(print_weyl_op(op));
      } else {
        std::vector<std::pair<Poly, int>> bases;
        for (size_t i = 0; i < factors.size(); ++i)
          if (i != dist) bases.emplace_back(factors[i], 1);
        TwistedElem elem = make_twisted(Poly::constant(ring, Rational(1)),
                                        factors[dist], 0, bases);
        for (auto& op : arrangement_ann_generators(factors, dist)) {
          bool ok = annihilates(op, elem);
          gens.push_back(Json{{"operator", print_weyl_op(op)},
                              {"annihilates", ok}});
          if (!ok) {
            std::cerr << "internal error: generator fails to annihilate\n";
            return 1;
          }
        }
      }
      doc["generators"] = gens;
      {
        Json warnings = Json::array();
        if (ring->size() < 3)
          warnings.push_back("fewer than 3 variables: the generation "
                             "statement is not claimed, outputs are still "
                             "verified annihilators");
        int n = int(ring->size());
        for (size_t i = 0; i < factors.size(); ++i)
          for (size_t j = i + 1; j < factors.size(); ++j) {
            Ideal pairLocus(ring, {factors[i], factors[j]},
                            MonomialOrder::local_ds());
            if (krull_dim(pairLocus) > n - 2)
              warnings.push_back("factors " + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) +
                                 " are not coprime; generation not claimed");
          }
        if (!warnings.empty()) doc["hypothesis_warnings"] = warnings;
      }
      if (withCharvar) {
        Ideal cv = arrangement_charvariety_ideal(factors, dist);
        Json ideal = Json::array();
        for (auto& g : groebner_basis(cv)) ideal.push_back(print_poly(g));
        doc["charvariety"] = ideal;
      }
      doc["version"] = dcond_version();
      return emit(doc, jsonMode, 0);
    }

    if (*ver) {
      RingPtr ring = ring_from_vars(vvars);
      RingPtr xs = twisted_ring(ring);
      Poly f = parse_poly(vfs, ring);
      Poly numer = parse_poly(vnumer, xs);
      std::vector<std::pair<Poly, int>> dens;
      for (auto& d : vdens) {
        size_t colon = d.rfind(':');
        std::string ptext = colon == std::string::npos ? d : d.substr(0, colon);
        int e = colon == std::string::npos ? 1 : std::stoi(d.substr(colon + 1));
        dens.emplace_back(parse_poly(ptext, ring), e);
      }
      TwistedElem elem = make_twisted(numer, f, vfpow, dens);
      std::optional<Rational> at;
      if (!atS.empty()) at = rat_from_string(atS);
      Json doc;
      Json rows = Json::array();
      bool all = true;
      for (auto& text : vops) {
        WeylOp op = parse_weyl_op(text, ring);
        bool ok = annihilates(op, elem, at);
        all = all && ok;
        rows.push_back(Json{{"operator", print_weyl_op(op)},
                            {"annihilates", ok}});
      }
      doc["results"] = rows;
      doc["all_annihilate"] = all;
      doc["version"] = dcond_version();
      return emit(doc, jsonMode, all ? 0 : 2);
    }

    if (*con) {
      RingPtr ring = ring_from_vars(cvars);
      Poly f = parse_poly(cpoly, ring);
      Ideal W = crel.empty() ? conormal_ideal(f) : [&] {
        std::vector<Poly> constraints;
        for (auto& t : crel) constraints.push_back(parse_poly(t, ring));
        return relative_conormal_ideal(f, constraints);
      }();
      Json doc;
      Json gens = Json::array();
      for (auto& g : groebner_basis(W)) gens.push_back(print_poly(g));
      doc["ideal"] = gens;
      doc["version"] = dcond_version();
      return emit(doc, jsonMode, 0);
    }

    if (*cor) {
      if (threads > 0) kernels::set_threads(threads);
      auto fixtures = load_fixture_dir(corpusPath);
      if (fixtures.empty()) {
        std::cerr << "no fixtures found under " << corpusPath << "\n";
        return 1;
      }
      auto results = run_corpus(fixtures, corTimeout);
      int failed = 0;
      Json doc;
      Json rows = Json::array();
      for (auto& r : results) {
        if (!r.passed) ++failed;
        if (jsonMode) {
          Json row;
          row["id"] = r.id;
          row["passed"] = r.passed;
          if (!r.mismatches.empty()) row["mismatches"] = r.mismatches;
          rows.push_back(std::move(row));
        } else {
          std::cout << (r.passed ? "pass  " : "FAIL  ") << r.id << "\n";
          for (auto& m : r.mismatches) std::cout << "      " << m << "\n";
        }
      }
      if (jsonMode) {
        doc["fixtures"] = rows;
        doc["failed"] = failed;
        doc["version"] = dcond_version();
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << results.size() - failed << "/" << results.size()
                  << " fixtures passed\n";
      }
      return failed ? 2 : 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
