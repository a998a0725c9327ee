#include "dcond/bernstein.hpp"

#include <algorithm>

#include "dcond/groebner.hpp"
#include "dcond/parse.hpp"

namespace dcond {

MilnorData milnor_data(const Poly& f, const std::optional<WeightSystem>& w,
                       const GroebnerOptions& opt) {
  if (f.is_zero() || f.constant_term() != 0)
    throw std::invalid_argument("milnor_data: need f(0)=0, f != 0");
  RingPtr ring = f.ring();
  size_t n = ring->size();
  std::vector<Poly> jac;
  for (size_t i = 0; i < n; ++i) jac.push_back(f.derivative(int(i)));
  MonomialOrder ord = MonomialOrder::local_ds();
  if (w) {
    std::vector<Rational> wv;
    for (size_t i = 0; i < n; ++i) wv.push_back(w->alpha[i]);
    ord = MonomialOrder::weighted(wv);
  }
  Ideal J(ring, jac, ord);
  QuotientBasis qb = quotient_monomial_basis(J, opt);
  MilnorData md;
  md.isolated = qb.finite;
  if (!qb.finite) return md;
  md.basis = qb.monomials;
  md.milnorNumber = qb.monomials.size();
  if (w) {
    std::vector<int> base = ring->indices_of(VarClass::Base);
    for (auto& m : md.basis) md.weights.push_back(w->monomial_weight(m, base));
  }
  return md;
}

MonomialBs bs_monomial(const RingPtr& xring, const Expvec& gamma) {
  if (ev_is_zero(gamma))
    throw std::invalid_argument("bs_monomial: zero exponent vector");
  std::map<Rational, int> roots;
  Rational coef(1);
  for (size_t i = 0; i < gamma.size(); ++i) {
    for (int k = 1; k <= gamma[i]; ++k) roots[rat_make(-k, gamma[i])] += 1;
    if (gamma[i]) coef /= rat_pow(Rational(gamma[i]), unsigned(gamma[i]));
  }
  MonomialBs out;
  out.b = BFunction::from_roots(roots);
  out.P = WeylOp::term(xring, ev_zero(gamma.size()), gamma, 0, coef);
  return out;
}

std::optional<BFunction> bs_quasihomogeneous(const Poly& f,
                                             const GroebnerOptions& opt) {
  auto w = detect_weights(f);
  if (!w) return std::nullopt;
  MilnorData md = milnor_data(f, w, opt);
  if (!md.isolated) return std::nullopt;
  Rational alphaSum(0);
  for (auto& a : w->alpha) alphaSum += a;
  std::set<Rational> expSet;
  for (auto& wt : md.weights) expSet.insert(alphaSum + wt);
  std::map<Rational, int> roots;
  roots[Rational(-1)] += 1;
  for (auto& c : expSet) roots[Rational(-c)] += 1;
  return BFunction::from_roots(roots);
}

std::optional<Restriction> restrict_at_smooth_factor(const Poly& h,
                                                     const Poly& l) {
  RingPtr ring = l.ring();
  size_t n = ring->size();
  for (size_t i = 0; i < n; ++i) {
    if (l.degree_in(int(i)) != 1) continue;
    Poly c = l.coefficient_of(int(i), 1);
    if (!c.is_constant() || c.is_zero()) continue;
    Poly q = l.coefficient_of(int(i), 0);
    Poly value = q * (Rational(-1) / c.constant_term());
    Poly restricted = h.substitute(int(i), value.transported(h.ring()));
    std::vector<bool> keep(h.ring()->size(), true);
    keep[h.ring()->require(ring->var(i).name)] = false;
    RingPtr sub = h.ring()->restricted(keep);
    Restriction out;
    out.restricted = restricted.transported(sub);
    out.removedVar = int(i);
    return out;
  }
  return std::nullopt;
}

std::set<Rational> rescale_roots(const std::set<Rational>& roots, unsigned p) {
  if (p == 0) throw std::invalid_argument("rescale_roots: p must be positive");
  std::set<Rational> out;
  for (auto& r : roots)
    for (unsigned i = 0; i < p; ++i)
      out.insert(Rational(r - Rational(i)) / Rational(p));
  return out;
}

Poly shrink_to_support(const Poly& h) {
  std::vector<bool> used = h.used_vars();
  bool all = true;
  for (bool b : used) all = all && b;
  if (all) return h;
  return h.transported(h.ring()->restricted(used));
}

bool is_squarefree_curve(const Poly& g, const GroebnerOptions& opt) {
  Poly gs = shrink_to_support(g);
  RingPtr ring = gs.ring();
  if (ring->size() > 2)
    throw std::invalid_argument("is_squarefree_curve: more than two variables");
  std::vector<Poly> gens{gs};
  for (size_t i = 0; i < ring->size(); ++i) gens.push_back(gs.derivative(int(i)));
  Ideal I(ring, gens, MonomialOrder::grevlex());
  return krull_dim(I, opt) <= 0;
}

std::vector<Poly> split_known_factors(const Poly& h) {
  std::vector<Poly> out;
  RingPtr ring = h.ring();
  size_t n = ring->size();
  Poly rest = h;
  // per-variable monomial content
  for (size_t i = 0; i < n; ++i) {
    int m = INT32_MAX;
    for (auto& [ev, c] : rest.terms()) m = std::min(m, int(ev[i]));
    if (rest.is_zero()) break;
    for (int k = 0; k < m; ++k) {
      out.push_back(Poly::variable(ring, int(i)));
      rest = *divide_exact(rest, Poly::variable(ring, int(i)));
    }
  }
  // graph-quadric factors x_a - x_b x_c
  bool progress = true;
  while (progress && !rest.is_constant()) {
    progress = false;
    for (size_t a = 0; a < n && !progress; ++a) {
      for (size_t b = 0; b < n && !progress; ++b) {
        if (b == a) continue;
        for (size_t c = b + 1; c < n && !progress; ++c) {
          if (c == a) continue;
          Expvec q = ev_zero(n);
          q[b] = 1;
          q[c] = 1;
          Poly l = Poly::variable(ring, int(a)) -
                   Poly::monomial(ring, q, Rational(1));
          if (auto quo = divide_exact(rest, l)) {
            out.push_back(l);
            rest = *quo;
            progress = true;
          }
        }
      }
    }
  }
  if (!rest.is_constant() || rest.constant_term() != 1) out.push_back(rest);
  return out;
}

namespace {

bool graph_form(const Poly& l, int* var = nullptr) {
  RingPtr ring = l.ring();
  for (size_t i = 0; i < ring->size(); ++i) {
    if (l.degree_in(int(i)) != 1) continue;
    Poly c = l.coefficient_of(int(i), 1);
    if (c.is_constant() && !c.is_zero()) {
      if (var) *var = int(i);
      return true;
    }
  }
  return false;
}

// factor = x_a - x_b x_c up to scalar, with distinct a, b, c
bool graph_quadric_form(const Poly& l, int* aOut, int* bOut, int* cOut) {
  if (l.term_count() != 2) return false;
  RingPtr ring = l.ring();
  int a = -1, b = -1, c = -1;
  Rational ca, cbc;
  for (auto& [ev, k] : l.terms()) {
    long d = ev_total(ev);
    if (d == 1) {
      for (size_t i = 0; i < ev.size(); ++i)
        if (ev[i] == 1) a = int(i);
      ca = k;
    } else if (d == 2) {
      std::vector<int> vars;
      for (size_t i = 0; i < ev.size(); ++i)
        if (ev[i] == 1) vars.push_back(int(i));
      if (vars.size() != 2) return false;
      b = vars[0];
      c = vars[1];
      cbc = k;
    } else {
      return false;
    }
  }
  if (a < 0 || b < 0 || a == b || a == c) return false;
  if (ca + cbc != 0) return false;  // up to scalar: c*(x_a - x_b x_c)
  if (aOut) *aOut = a;
  if (bOut) *bOut = b;
  if (cOut) *cOut = c;
  return true;
}

struct FactorGroup {
  Poly factor;
  int mult;
};

Poly product_of(const std::vector<Poly>& fs, const RingPtr& ring) {
  Poly h = Poly::constant(ring, Rational(1));
  for (auto& f : fs) h = h * f;
  return h;
}

BVerdict decide_B_impl(const std::vector<Poly>& factorsIn, const BOptions& opt,
                       int depth);

BVerdict sub_decision(const std::vector<Poly>& factors, const BOptions& opt,
                      int depth, Verdict& parent, const std::string& label) {
  BVerdict sub = decide_B_impl(factors, opt, depth + 1);
  parent.note("sub-decision", label + ": " + to_string(sub.verdict.state));
  for (auto& st : sub.verdict.trace)
    parent.trace.push_back({"  " + st.rule, st.detail});
  return sub;
}

bool pairwise_coprime_local(const std::vector<Poly>& fs,
                            const GroebnerOptions& opt) {
  if (fs.empty()) return true;
  RingPtr ring = fs.front().ring();
  int n = int(ring->size());
  for (size_t i = 0; i < fs.size(); ++i)
    for (size_t j = i + 1; j < fs.size(); ++j) {
      Ideal I(ring, {fs[i], fs[j]}, MonomialOrder::local_ds());
      if (krull_dim(I, opt) > n - 2) return false;
    }
  return true;
}

BVerdict decide_B_impl(const std::vector<Poly>& factorsIn, const BOptions& opt,
                       int depth) {
  BVerdict out;
  if (depth > opt.maxDepth) {
    out.verdict = Verdict::make_unknown("recursion limit");
    return out;
  }
  RingPtr ring;
  for (auto& f : factorsIn)
    if (f.ring()) ring = f.ring();

  std::vector<Poly> flat;
  Rational scalar(1);
  for (auto& f : factorsIn) {
    for (auto& g : split_known_factors(f)) {
      if (g.is_constant()) {
        scalar *= g.constant_term();
        continue;
      }
      if (g.constant_term() != 0) {
        out.verdict =
            Verdict::make_unknown("non-constant unit factor (germ not centered)");
        return out;
      }
      flat.push_back(g);
    }
  }
  if (flat.empty()) throw std::invalid_argument("decide_B: unit input");
  Poly h = product_of(flat, ring);

  std::vector<FactorGroup> groups;
  for (auto& f : flat) {
    bool foundGroup = false;
    for (auto& g : groups)
      if (g.factor == f) {
        g.mult += 1;
        foundGroup = true;
        break;
      }
    if (!foundGroup) groups.push_back({f, 1});
  }

  auto enabled = [&](uint32_t r) { return (opt.rules & r) != 0; };

  // monomial closed form
  if (enabled(kBMono) && h.is_monomial()) {
    const Expvec& gamma = h.terms().begin()->first;
    MonomialBs mb = bs_monomial(ring, gamma);
    out.roots = mb.b;
    out.verdict = Verdict::make_holds(
        "R-mono", "monomial closed form, roots " + mb.b.to_string());
    return out;
  }

  // product of linear forms
  if (enabled(kBArr)) {
    bool allLinear = true;
    for (auto& f : flat)
      allLinear = allLinear && f.total_degree() == 1 && f.constant_term() == 0;
    bool homogBivariate = false;
    if (!allLinear) {
      Poly hs = shrink_to_support(h);
      long d = hs.total_degree();
      bool homog = true;
      for (auto& [ev, c] : hs.terms()) homog = homog && ev_total(ev) == d;
      homogBivariate = homog && hs.ring()->size() <= 2;
    }
    if (allLinear || homogBivariate) {
      out.verdict =
          Verdict::make_holds("R-arr", "product of (complex) linear forms");
      return out;
    }
  }

  // weighted homogeneous isolated singularity: exact root set
  if (enabled(kBQh)) {
    Poly hs = shrink_to_support(h);
    try {
      if (auto b = bs_quasihomogeneous(hs, opt.groebner)) {
        out.roots = b;
        if (b->has_integer_root_leq(-2)) {
          Rational witness(0);
          for (auto& [r, m] : b->roots)
            if (rat_is_integer(r) && r <= Rational(-2)) {
              witness = r;
              break;
            }
          out.verdict = Verdict::make_fails(
              "R-qh", "integral root " + rat_to_string(witness) + " in " +
                          b->to_string());
        } else {
          out.verdict =
              Verdict::make_holds("R-qh", "exponent roots " + b->to_string());
        }
        return out;
      }
    } catch (const ResourceLimitError& e) {
      out.verdict = Verdict::make_unknown(e.what());
      return out;
    }
  }

  // reduced plane curve
  if (enabled(kBPlane)) {
    Poly hs = shrink_to_support(h);
    try {
      if (hs.ring()->size() <= 2 && is_squarefree_curve(hs, opt.groebner)) {
        out.verdict = Verdict::make_holds("R-plane", "reduced plane curve");
        return out;
      }
    } catch (const ResourceLimitError&) {
    }
  }

  // graph-quadric times plane curve
  if (enabled(kBCourbe)) {
    for (size_t gi = 0; gi < groups.size(); ++gi) {
      int a, b, c;
      if (groups[gi].mult != 1 ||
          !graph_quadric_form(groups[gi].factor, &a, &b, &c))
        continue;
      std::vector<Poly> others;
      for (size_t j = 0; j < groups.size(); ++j)
        if (j != gi)
          for (int k = 0; k < groups[j].mult; ++k)
            others.push_back(groups[j].factor);
      if (others.empty()) continue;
      Poly g = product_of(others, ring);
      std::vector<bool> used = g.used_vars();
      bool insidePlane = true;
      for (size_t v = 0; v < used.size(); ++v)
        if (used[v] && int(v) != a && int(v) != b) insidePlane = false;
      if (!insidePlane) continue;
      try {
        if (g.constant_term() == 0 && is_squarefree_curve(g, opt.groebner)) {
          out.verdict = Verdict::make_holds(
              "R-courbe", "graph-quadric factor times a reduced plane curve");
          return out;
        }
      } catch (const ResourceLimitError&) {
      }
    }
  }

  // smooth factor in graph form: restriction decides
  if (enabled(kBSmoothFactor) && groups.size() >= 2) {
    for (size_t gi = 0; gi < groups.size(); ++gi) {
      if (groups[gi].mult != 1 || !graph_form(groups[gi].factor)) continue;
      std::vector<Poly> others;
      for (size_t j = 0; j < groups.size(); ++j)
        if (j != gi)
          for (int k = 0; k < groups[j].mult; ++k)
            others.push_back(groups[j].factor);
      Poly g = product_of(others, ring);
      auto restr = restrict_at_smooth_factor(g, groups[gi].factor);
      if (!restr) continue;
      if (restr->restricted.is_zero()) continue;  // factor divides g
      out.verdict.note("R-smooth-factor",
                       "restricting " + print_poly(g) + " to {" +
                           print_poly(groups[gi].factor) + " = 0}");
      BVerdict sub = sub_decision({restr->restricted}, opt, depth,
                                  out.verdict, "restricted germ");
      if (sub.verdict.fails()) {
        out.verdict.state = VerdictState::Fails;
        out.verdict.note("R-smooth-factor",
                         "restricted germ fails, so the product fails");
        return out;
      }
      if (sub.verdict.holds()) {
        BVerdict bl =
            sub_decision({groups[gi].factor}, opt, depth, out.verdict,
                         "smooth factor");
        BVerdict bg = sub_decision(others, opt, depth, out.verdict,
                                   "complementary factor");
        if (bl.verdict.holds() && bg.verdict.holds()) {
          out.verdict.state = VerdictState::Holds;
          out.verdict.note("R-smooth-factor",
                           "restriction and both factors hold");
          if (sub.roots) out.roots = sub.roots;  // roots of the restricted germ
          return out;
        }
      }
      out.verdict.trace.clear();
    }
  }

  // repeated factors reduce to the reduced product
  if (enabled(kBPower)) {
    for (size_t gi = 0; gi < groups.size(); ++gi) {
      if (groups[gi].mult < 2) continue;
      std::vector<Poly> others;
      for (size_t j = 0; j < groups.size(); ++j)
        if (j != gi)
          for (int k = 0; k < groups[j].mult; ++k)
            others.push_back(groups[j].factor);
      if (others.empty()) {
        BVerdict bl = sub_decision({groups[gi].factor}, opt, depth,
                                   out.verdict, "reduced power base");
        if (bl.verdict.holds()) {
          out.verdict.state = VerdictState::Holds;
          out.verdict.note("R-power", "root rescaling from the reduced base");
          return out;
        }
        out.verdict.trace.clear();
        continue;
      }
      BVerdict bg =
          sub_decision(others, opt, depth, out.verdict, "complementary factor");
      std::vector<Poly> once = others;
      once.push_back(groups[gi].factor);
      BVerdict b1 =
          sub_decision(once, opt, depth, out.verdict, "reduced product");
      if (bg.verdict.holds() && b1.verdict.holds()) {
        out.verdict.state = VerdictState::Holds;
        out.verdict.note("R-power",
                         "reduced product holds; rescaling lifts the power");
        return out;
      }
      out.verdict.trace.clear();
    }
  }

  bool allSimple = true;
  for (auto& g : groups) allSimple = allSimple && g.mult == 1;
  size_t n = ring->size();
  size_t p = groups.size();

  // p = n coprime factors cutting out the origin
  if (enabled(kBOrigin) && allSimple && p == n && p >= 2) {
    std::vector<Poly> fs;
    for (auto& g : groups) fs.push_back(g.factor);
    try {
      if (pairwise_coprime_local(fs, opt.groebner) &&
          krull_dim(Ideal(ring, fs, MonomialOrder::local_ds()), opt.groebner) <= 0) {
        bool allHold = true;
        for (size_t skip = 0; skip < p && allHold; ++skip) {
          std::vector<Poly> subp;
          for (size_t j = 0; j < p; ++j)
            if (j != skip) subp.push_back(fs[j]);
          BVerdict sv = sub_decision(subp, opt, depth, out.verdict,
                                     "subproduct omitting factor " +
                                         std::to_string(skip + 1));
          allHold = sv.verdict.holds();
        }
        if (allHold) {
          out.verdict.state = VerdictState::Holds;
          out.verdict.note("R-origin",
                           "n coprime factors cutting the origin; all "
                           "(n-1)-subproducts hold");
          return out;
        }
        out.verdict.trace.clear();
      }
    } catch (const ResourceLimitError&) {
    }
  }

  // p >= n+1 factors: n-subproducts suffice
  if (enabled(kBMany) && allSimple && p >= n + 1) {
    std::vector<Poly> fs;
    for (auto& g : groups) fs.push_back(g.factor);
    try {
      if (pairwise_coprime_local(fs, opt.groebner)) {
        bool allHold = true;
        std::vector<size_t> idx(n);
        for (size_t i = 0; i < n; ++i) idx[i] = i;
        for (;;) {
          std::vector<Poly> subp;
          for (size_t i : idx) subp.push_back(fs[i]);
          BVerdict sv =
              sub_decision(subp, opt, depth, out.verdict, "n-subproduct");
          if (!sv.verdict.holds()) {
            allHold = false;
            break;
          }
          int pos = int(n) - 1;
          while (pos >= 0 && idx[pos] == p - n + pos) --pos;
          if (pos < 0) break;
          ++idx[pos];
          for (size_t j = pos + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (allHold) {
          out.verdict.state = VerdictState::Holds;
          out.verdict.note("R-many", "all n-subproducts hold");
          return out;
        }
        out.verdict.trace.clear();
      }
    } catch (const ResourceLimitError&) {
    }
  }

  out.verdict = Verdict::make_unknown(
      flat.size() == 1 ? "no applicable rule (factorization may be needed)"
                       : "no applicable rule");
  return out;
}

}  // namespace

BVerdict decide_B(const std::vector<Poly>& factors, const BOptions& opt) {
  if (factors.empty()) throw std::invalid_argument("decide_B: empty input");
  RingPtr ring;
  for (auto& f : factors) {
    if (f.is_zero()) throw std::invalid_argument("decide_B: zero factor");
    if (f.ring()) ring = f.ring();
  }
  Poly h = Poly::constant(ring, Rational(1));
  for (auto& f : factors) h = h * f;
  if (h.constant_term() != 0)
    throw std::invalid_argument("decide_B: need h(0) = 0");
  return decide_B_impl(factors, opt, 0);
}

BVerdict decide_B(const Poly& h, const BOptions& opt) {
  return decide_B(std::vector<Poly>{h}, opt);
}

}  // namespace dcond
