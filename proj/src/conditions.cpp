#include "dcond/conditions.hpp"

#include <algorithm>

#include "dcond/parse.hpp"

namespace dcond {

const char* cond_name(Cond c) {
  switch (c) {
    case Cond::H: return "H";
    case Cond::B: return "B";
    case Cond::A_h: return "A";
    case Cond::A_inv: return "A_INV";
    case Cond::W: return "W";
    case Cond::G: return "G";
    case Cond::L: return "L";
    case Cond::M: return "M";
    case Cond::A_log: return "A_LOG";
  }
  return "?";
}

std::optional<Cond> cond_from_name(const std::string& name) {
  std::string u;
  for (char ch : name) u += char(std::toupper(uint8_t(ch)));
  if (u == "H") return Cond::H;
  if (u == "B") return Cond::B;
  if (u == "A") return Cond::A_h;
  if (u == "A_INV" || u == "AINV" || u == "A1H") return Cond::A_inv;
  if (u == "W") return Cond::W;
  if (u == "G") return Cond::G;
  if (u == "L") return Cond::L;
  if (u == "M") return Cond::M;
  if (u == "A_LOG" || u == "ALOG") return Cond::A_log;
  return std::nullopt;
}

namespace {

struct Edge {
  Cond from, to;
};

constexpr Cond kAll[] = {Cond::H, Cond::B,     Cond::A_h, Cond::A_inv, Cond::W,
                         Cond::G, Cond::A_log, Cond::L,   Cond::M};

const Edge kEdges[] = {
    {Cond::W, Cond::G},         {Cond::G, Cond::A_h},
    {Cond::G, Cond::L},         {Cond::A_h, Cond::M},
    {Cond::L, Cond::M},         {Cond::A_inv, Cond::M},
    {Cond::A_inv, Cond::B},     {Cond::A_inv, Cond::A_log},
    {Cond::A_log, Cond::B},
};

void assign(ConditionLattice& lat, Cond c, VerdictState s,
            const std::string& why) {
  VerdictState cur = lat.state(c);
  if (cur == s) return;
  if (cur != VerdictState::Unknown)
    throw LatticeContradiction(std::string("condition ") + cond_name(c) +
                               " forced both ways (" + why + ")");
  Verdict& v = lat.verdicts[c];
  v.state = s;
  v.reason.clear();
  v.note("implication", why);
}

}  // namespace

ConditionLattice propagate_implications(ConditionLattice lat) {
  // no contradictions on entry
  bool changed = true;
  while (changed) {
    changed = false;
    auto before = [&] {
      std::map<Cond, VerdictState> snap;
      for (Cond c : kAll) snap[c] = lat.state(c);
      return snap;
    }();
    for (auto& e : kEdges) {
      if (lat.state(e.from) == VerdictState::Holds &&
          lat.state(e.to) != VerdictState::Holds)
        assign(lat, e.to, VerdictState::Holds,
               std::string(cond_name(e.from)) + " => " + cond_name(e.to));
      if (lat.state(e.to) == VerdictState::Fails &&
          lat.state(e.from) != VerdictState::Fails)
        assign(lat, e.from, VerdictState::Fails,
               std::string("not ") + cond_name(e.to) + " => not " +
                   cond_name(e.from));
    }
    // (H and B and A(h)) => A(1/h), with contrapositives
    VerdictState sh = lat.state(Cond::H), sb = lat.state(Cond::B),
                 sa = lat.state(Cond::A_h), si = lat.state(Cond::A_inv);
    if (sh == VerdictState::Holds && sb == VerdictState::Holds &&
        sa == VerdictState::Holds && si != VerdictState::Holds)
      assign(lat, Cond::A_inv, VerdictState::Holds, "H and B and A => A_INV");
    if (si == VerdictState::Fails) {
      if (sh == VerdictState::Holds && sb == VerdictState::Holds &&
          sa != VerdictState::Fails)
        assign(lat, Cond::A_h, VerdictState::Fails,
               "H and B hold but A_INV fails => A fails");
      if (sh == VerdictState::Holds && sa == VerdictState::Holds &&
          sb != VerdictState::Fails)
        assign(lat, Cond::B, VerdictState::Fails,
               "H and A hold but A_INV fails => B fails");
      if (sb == VerdictState::Holds && sa == VerdictState::Holds &&
          sh != VerdictState::Fails)
        assign(lat, Cond::H, VerdictState::Fails,
               "B and A hold but A_INV fails => H fails");
    }
    for (Cond c : kAll)
      if (lat.state(c) != before[c]) changed = true;
  }
  return lat;
}

Verdict verify_generic_arrangement(const std::vector<Poly>& factors,
                                   const GroebnerOptions& opt) {
  size_t p = factors.size();
  if (p < 2)
    return Verdict::make_fails("generic-arrangement", "need at least 2 factors");
  RingPtr ring = factors.front().ring();
  size_t n = ring->size();
  for (auto& f : factors)
    if (f.is_zero() || f.constant_term() != 0)
      return Verdict::make_fails("generic-arrangement",
                                 "factor must vanish at the origin");
  try {
    // pairwise coprimality (local dimension of the pair locus)
    for (size_t i = 0; i < p; ++i)
      for (size_t j = i + 1; j < p; ++j) {
        Ideal I(ring, {factors[i], factors[j]}, MonomialOrder::local_ds());
        if (krull_dim(I, opt) > int(n) - 2)
          return Verdict::make_fails(
              "generic-arrangement",
              "factors " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                  " share a component");
      }
    // isolated singularities
    for (size_t i = 0; i < p; ++i) {
      MilnorData md = milnor_data(factors[i], std::nullopt, opt);
      if (!md.isolated)
        return Verdict::make_fails(
            "generic-arrangement",
            "factor " + std::to_string(i + 1) + " has a non-isolated singularity");
    }
    // k-subfamilies are isolated complete intersections
    std::vector<int> allVars(n);
    for (size_t i = 0; i < n; ++i) allVars[i] = int(i);
    for (size_t k = 2; k <= std::min(p, n); ++k) {
      std::vector<size_t> idx(k);
      for (size_t i = 0; i < k; ++i) idx[i] = i;
      for (;;) {
        std::vector<Poly> sub;
        for (size_t i : idx) sub.push_back(factors[i]);
        std::vector<Poly> gens = sub;
        auto J = jacobian(sub, allVars);
        std::vector<int> rows(k);
        for (size_t i = 0; i < k; ++i) rows[i] = int(i);
        std::vector<size_t> cols(k);
        for (size_t i = 0; i < k; ++i) cols[i] = i;
        for (;;) {
          std::vector<int> cidx(cols.begin(), cols.end());
          gens.push_back(minor_det(J, rows, cidx));
          int pos = int(k) - 1;
          while (pos >= 0 && cols[pos] == n - k + pos) --pos;
          if (pos < 0) break;
          ++cols[pos];
          for (size_t j = pos + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
        }
        Ideal I(ring, gens, MonomialOrder::local_ds());
        if (krull_dim(I, opt) > 0) {
          std::string names;
          for (size_t i : idx) names += (names.empty() ? "" : ",") +
                                        std::to_string(i + 1);
          return Verdict::make_fails("generic-arrangement",
                                     "subfamily {" + names +
                                         "} is not an isolated complete "
                                         "intersection");
        }
        int pos = int(k) - 1;
        while (pos >= 0 && idx[pos] == p - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (size_t j = pos + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  } catch (const ResourceLimitError& e) {
    return Verdict::make_unknown(e.what());
  }
  return Verdict::make_holds("generic-arrangement",
                             "all subfamilies are isolated complete "
                             "intersections");
}

Verdict corpdeux_decision(const Poly& h1, const Poly& h2, const WeightSystem& w,
                          const GroebnerOptions& opt) {
  RingPtr ring = h1.ring();
  size_t n = ring->size();
  auto d1 = weighted_degree_if_homogeneous(h1, w);
  auto d2 = weighted_degree_if_homogeneous(h2, w);
  if (!d1 || !d2)
    throw std::invalid_argument("corpdeux: factors not weighted homogeneous");
  Rational alphaSum(0);
  for (auto& a : w.alpha) alphaSum += a;
  std::vector<Rational> wv(w.alpha);

  std::vector<int> allVars(n);
  for (size_t i = 0; i < n; ++i) allVars[i] = int(i);
  auto J = jacobian({h1, h2}, allVars);
  std::vector<Poly> minors;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      minors.push_back(minor_det(J, {0, 1}, {int(a), int(b)}));

  std::string firstWitness;
  try {
    for (int j = 0; j < 2; ++j) {
      const Poly& hj = j == 0 ? h1 : h2;
      Rational dj = j == 0 ? *d1 : *d2;
      std::vector<Poly> gens = minors;
      gens.push_back(hj);
      Ideal I(ring, gens, MonomialOrder::weighted(wv));
      QuotientBasis qb = quotient_monomial_basis(I, opt);
      if (!qb.finite) continue;  // cannot run the finite weight check
      std::vector<int> base = ring->indices_of(VarClass::Base);
      bool bad = false;
      for (auto& m : qb.monomials) {
        Rational w0 = w.monomial_weight(m, base);
        Rational k = (w0 + alphaSum) / dj;
        if (rat_is_integer(k) && k >= 2) {
          bad = true;
          if (firstWitness.empty())
            firstWitness = print_monomial(ring, m) + " (j=" +
                           std::to_string(j + 1) + ", weight " +
                           rat_to_string(w0) + ")";
          break;
        }
      }
      if (!bad) {
        Verdict v = Verdict::make_holds(
            "pair-weight-check",
            "no quotient class of weight d_j*k - sum(alpha), k >= 2, for j=" +
                std::to_string(j + 1));
        return v;
      }
    }
  } catch (const ResourceLimitError& e) {
    return Verdict::make_unknown(e.what());
  }
  if (firstWitness.empty())
    return Verdict::make_unknown("pair quotients are not finite dimensional");
  Verdict v = Verdict::make_fails("pair-weight-check",
                                  "witness class " + firstWitness);
  return v;
}

namespace {

// The pencil family (x_a - x_b x_c) * g(x_a, x_b): resolved by the explicit
// dichotomy on g.
std::optional<Verdict> family_route(const std::vector<Poly>& flat,
                                    const RingPtr& ring,
                                    const GroebnerOptions& opt) {
  std::vector<std::pair<Poly, int>> groups;
  for (auto& f : flat) {
    bool foundGroup = false;
    for (auto& g : groups)
      if (g.first == f) {
        g.second += 1;
        foundGroup = true;
      }
    if (!foundGroup) groups.emplace_back(f, 1);
  }
  for (size_t gi = 0; gi < groups.size(); ++gi) {
    if (groups[gi].second != 1) continue;
    // detect x_a - x_b x_c shape
    const Poly& l = groups[gi].first;
    if (l.term_count() != 2) continue;
    int a = -1, b = -1, c = -1;
    {
      Rational ca, cbc;
      for (auto& [ev, k] : l.terms()) {
        if (ev_total(ev) == 1) {
          for (size_t i = 0; i < ev.size(); ++i)
            if (ev[i] == 1) a = int(i);
          ca = k;
        } else if (ev_total(ev) == 2) {
          std::vector<int> vars;
          for (size_t i = 0; i < ev.size(); ++i)
            if (ev[i] == 1) vars.push_back(int(i));
          if (vars.size() == 2) {
            b = vars[0];
            c = vars[1];
          }
          cbc = k;
        }
      }
      if (a < 0 || b < 0 || a == b || a == c || ca + cbc != 0) continue;
    }
    std::vector<Poly> others;
    for (size_t j = 0; j < groups.size(); ++j)
      if (j != gi)
        for (int k = 0; k < groups[j].second; ++k) others.push_back(groups[j].first);
    if (others.empty()) continue;
    Poly g = Poly::constant(ring, Rational(1));
    for (auto& o : others) g = g * o;
    std::vector<bool> used = g.used_vars();
    bool plane = true;
    for (size_t v = 0; v < used.size(); ++v)
      if (used[v] && int(v) != a && int(v) != b) plane = false;
    if (!plane) continue;
    Poly gs = shrink_to_support(g);
    if (gs.ring()->size() > 2) continue;
    if (g.order_at_origin() < 3) continue;
    auto wg = detect_weights(gs);
    if (!wg) continue;
    if (!is_squarefree_curve(gs, opt)) continue;
    long deg = gs.total_degree();
    bool homogeneous = true;
    for (auto& [ev, cf] : gs.terms())
      homogeneous = homogeneous && ev_total(ev) == deg;
    if (!homogeneous) {
      return Verdict::make_fails(
          "family-pencil",
          "plane factor is weighted homogeneous but not homogeneous");
    }
    if (deg == 3) {
      return Verdict::make_holds("family-pencil",
                                 "plane factor homogeneous of degree 3");
    }
    return Verdict::make_unknown(
        "pencil family with homogeneous plane factor of degree " +
        std::to_string(deg) + " is undecided");
  }
  return std::nullopt;
}

}  // namespace

Verdict decide_A_inv(const std::vector<Poly>& factors,
                     const GroebnerOptions& opt) {
  if (factors.empty()) throw std::invalid_argument("decide_A_inv: empty input");
  RingPtr ring;
  for (auto& f : factors)
    if (f.ring()) ring = f.ring();
  std::vector<Poly> flat;
  for (auto& f : factors)
    for (auto& g : split_known_factors(f))
      if (!g.is_constant()) flat.push_back(g);
  if (flat.empty()) throw std::invalid_argument("decide_A_inv: unit input");
  Poly h = Poly::constant(ring, Rational(1));
  for (auto& f : flat) h = h * f;
  if (h.constant_term() != 0)
    throw std::invalid_argument("decide_A_inv: need h(0) = 0");

  BOptions bopt;
  bopt.groebner = opt;

  try {
    // (a) single isolated singularity
    MilnorData md = milnor_data(shrink_to_support(h), std::nullopt, opt);
    if (md.isolated) {
      Verdict v;
      v.note("route-isolated", "h has an isolated singularity");
      auto w = detect_weights(shrink_to_support(h));
      BVerdict b = decide_B(flat, bopt);
      for (auto& st : b.verdict.trace) v.trace.push_back(st);
      if (b.verdict.fails()) {
        v.state = VerdictState::Fails;
        v.note("route-isolated", "condition B fails");
        return v;
      }
      if (!w) {
        return Verdict::make_unknown(
            "not weighted homogeneous in the given coordinates (a coordinate "
            "change might succeed)");
      }
      if (b.verdict.holds()) {
        v.state = VerdictState::Holds;
        v.note("route-isolated", "weighted homogeneous and B holds");
        return v;
      }
      return Verdict::make_unknown("condition B undecided: " + b.verdict.reason);
    }

    // (b) certified generic arrangement
    if (flat.size() >= 2) {
      Verdict cert = verify_generic_arrangement(flat, opt);
      if (cert.holds()) {
        Verdict v;
        v.note("route-generic-arrangement", "arrangement certified");
        auto w = detect_weights(h);
        if (!w)
          return Verdict::make_unknown(
              "product not weighted homogeneous in the given coordinates");
        if (flat.size() == 2) {
          Verdict pair = corpdeux_decision(flat[0], flat[1], *w, opt);
          for (auto& st : pair.trace) v.trace.push_back(st);
          v.state = pair.state;
          v.reason = pair.reason;
          return v;
        }
        BVerdict b = decide_B(flat, bopt);
        for (auto& st : b.verdict.trace) v.trace.push_back(st);
        if (b.verdict.holds()) {
          v.state = VerdictState::Holds;
          v.note("route-generic-arrangement",
                 "weighted homogeneous and B holds");
          return v;
        }
        if (b.verdict.fails()) {
          v.state = VerdictState::Fails;
          v.note("route-generic-arrangement", "condition B fails");
          return v;
        }
        return Verdict::make_unknown("condition B undecided: " +
                                     b.verdict.reason);
      }
    }

    // (c) the pencil family
    if (auto fam = family_route(flat, ring, opt)) return *fam;
  } catch (const ResourceLimitError& e) {
    return Verdict::make_unknown(e.what());
  }
  return Verdict::make_unknown("no decision route applies");
}

}  // namespace dcond
