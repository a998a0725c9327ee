#include "dcond/groebner.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <tuple>

namespace dcond {

namespace {

std::mutex g_cache_mutex;

struct Budget {
  unsigned long long left;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  unsigned clockProbe = 0;
  void tick() {
    if (left == 0) throw ResourceLimitError("reduction step budget exceeded");
    --left;
    if (deadline && (++clockProbe & 0xFFFu) == 0 &&
        std::chrono::steady_clock::now() > *deadline)
      throw ResourceLimitError("soft timeout exceeded");
  }
};

// Terms sorted descending under the active order.
struct OPoly {
  std::vector<std::pair<Expvec, Rational>> t;
  bool empty() const { return t.empty(); }
  const Expvec& lm() const { return t.front().first; }
  const Rational& lc() const { return t.front().second; }
};

OPoly to_opoly(const Poly& p, const MonomialOrder& ord) {
  OPoly o;
  o.t.assign(p.terms().begin(), p.terms().end());
  std::sort(o.t.begin(), o.t.end(), [&](const auto& a, const auto& b) {
    return ord.cmp(a.first, b.first) > 0;
  });
  return o;
}

Poly to_poly(const OPoly& o, const RingPtr& ring) {
  Poly p(ring);
  for (auto& [ev, c] : o.t) p.add_term(ev, c);
  return p;
}

long opoly_deg(const OPoly& o) {
  long d = -1;
  for (auto& [ev, c] : o.t) d = std::max(d, ev_total(ev));
  return d;
}

long ecart(const OPoly& o) { return opoly_deg(o) - ev_total(o.lm()); }

// r = a - c * x^m * b  (merge of sorted term lists).
OPoly axpy(const OPoly& a, const Rational& c, const Expvec& m, const OPoly& b,
           const MonomialOrder& ord) {
  OPoly r;
  r.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() || j < b.t.size()) {
    if (j == b.t.size()) {
      r.t.push_back(a.t[i++]);
      continue;
    }
    Expvec bm = ev_add(b.t[j].first, m);
    if (i == a.t.size()) {
      r.t.emplace_back(std::move(bm), -(c * b.t[j].second));
      ++j;
      continue;
    }
    int cm = ord.cmp(a.t[i].first, bm);
    if (cm > 0) {
      r.t.push_back(a.t[i++]);
    } else if (cm < 0) {
      r.t.emplace_back(std::move(bm), -(c * b.t[j].second));
      ++j;
    } else {
      Rational v = a.t[i].second - c * b.t[j].second;
      if (v != 0) r.t.emplace_back(a.t[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return r;
}

OPoly mono_mul(const OPoly& a, const Rational& c, const Expvec& m) {
  OPoly r;
  r.t.reserve(a.t.size());
  for (auto& [ev, k] : a.t) r.t.emplace_back(ev_add(ev, m), c * k);
  return r;
}

struct NFState {
  OPoly rem;
  Poly unit;                  // unit * p = sum cofs_i g_i + rem
  std::vector<Poly> cofs;
  bool tracked = false;
};

// Full reduction for global orders; cofactor tracking optional.
NFState nf_global(const OPoly& p, const std::vector<OPoly>& G,
                  const MonomialOrder& ord, const RingPtr& ring, Budget& bud,
                  bool track) {
  NFState st;
  st.tracked = track;
  if (track) {
    st.unit = Poly::constant(ring, Rational(1));
    st.cofs.assign(G.size(), Poly(ring));
  }
  OPoly h = p;
  OPoly out;
  while (!h.empty()) {
    bool reduced = false;
    for (size_t k = 0; k < G.size(); ++k) {
      if (G[k].empty() || !ev_divides(G[k].lm(), h.lm())) continue;
      Rational c = h.lc() / G[k].lc();
      Expvec m = ev_sub(h.lm(), G[k].lm());
      h = axpy(h, c, m, G[k], ord);
      if (track) st.cofs[k] += Poly::monomial(ring, m, c);
      bud.tick();
      reduced = true;
      break;
    }
    if (!reduced) {
      out.t.push_back(h.t.front());
      h.t.erase(h.t.begin());
    }
  }
  st.rem = std::move(out);
  return st;
}

// Mora weak normal form (tangent-cone algorithm) for local/mixed orders.
NFState nf_mora(const OPoly& p, const std::vector<OPoly>& G,
                const MonomialOrder& ord, const RingPtr& ring, Budget& bud,
                bool track) {
  struct Stored {
    OPoly poly;
    long ec;
    Poly unit;
    std::vector<Poly> cofs;
  };
  NFState st;
  st.tracked = track;
  st.unit = Poly::constant(ring, Rational(1));
  st.cofs.assign(G.size(), Poly(ring));
  std::vector<long> gEcart(G.size());
  for (size_t k = 0; k < G.size(); ++k)
    gEcart[k] = G[k].empty() ? 0 : ecart(G[k]);
  std::vector<Stored> extra;

  OPoly h = p;
  Poly u = Poly::constant(ring, Rational(1));
  std::vector<Poly> cofs(G.size(), Poly(ring));

  while (!h.empty()) {
    long bestEc = 0;
    int bestKind = -1;  // 0 = input, 1 = stored
    size_t bestIdx = 0;
    for (size_t k = 0; k < G.size(); ++k) {
      if (G[k].empty() || !ev_divides(G[k].lm(), h.lm())) continue;
      if (bestKind < 0 || gEcart[k] < bestEc) {
        bestKind = 0;
        bestIdx = k;
        bestEc = gEcart[k];
      }
    }
    for (size_t k = 0; k < extra.size(); ++k) {
      if (!ev_divides(extra[k].poly.lm(), h.lm())) continue;
      if (bestKind < 0 || extra[k].ec < bestEc) {
        bestKind = 1;
        bestIdx = k;
        bestEc = extra[k].ec;
      }
    }
    if (bestKind < 0) break;
    long he = ecart(h);
    if (bestEc > he) extra.push_back({h, he, u, cofs});
    if (bestKind == 0) {
      const OPoly& g = G[bestIdx];
      Rational c = h.lc() / g.lc();
      Expvec m = ev_sub(h.lm(), g.lm());
      h = axpy(h, c, m, g, ord);
      cofs[bestIdx] += Poly::monomial(ring, m, c);
    } else {
      const Stored& e = extra[bestIdx];
      Rational c = h.lc() / e.poly.lc();
      Expvec m = ev_sub(h.lm(), e.poly.lm());
      h = axpy(h, c, m, e.poly, ord);
      Poly mono = Poly::monomial(ring, m, c);
      u -= mono * e.unit;
      for (size_t i = 0; i < cofs.size(); ++i) cofs[i] -= mono * e.cofs[i];
    }
    bud.tick();
  }
  st.rem = std::move(h);
  st.unit = std::move(u);
  st.cofs = std::move(cofs);
  return st;
}

NFState nf(const OPoly& p, const std::vector<OPoly>& G, const MonomialOrder& ord,
           const RingPtr& ring, Budget& bud, bool track) {
  if (ord.is_global()) return nf_global(p, G, ord, ring, bud, track);
  return nf_mora(p, G, ord, ring, bud, track);
}

struct BasisBuild {
  std::vector<OPoly> G;
  std::vector<std::vector<Poly>> Arows;  // G expressed in the inputs
  std::vector<std::vector<Poly>> gsyz;   // syzygies among G elements
};

// Buchberger loop with normal pair strategy (degree of the lcm, then plain
// lexicographic tie-break, then indices). With track=true every pair is
// processed (no criteria), so the zero reductions generate the full syzygy
// module by Schreyer's theorem.
BasisBuild build_basis(const std::vector<Poly>& inputs, const MonomialOrder& ord,
                       const RingPtr& ring, Budget& bud, bool track) {
  BasisBuild b;
  using PairKey = std::tuple<long, Expvec, int, int>;
  std::set<PairKey> pairs;

  auto add_pairs_for = [&](size_t jNew) {
    for (size_t i = 0; i < jNew; ++i) {
      if (b.G[i].empty()) continue;
      Expvec l = ev_lcm(b.G[i].lm(), b.G[jNew].lm());
      pairs.emplace(ev_total(l), l, int(i), int(jNew));
    }
  };

  for (size_t i = 0; i < inputs.size(); ++i) {
    OPoly o = to_opoly(inputs[i], ord);
    if (o.empty()) continue;
    b.G.push_back(std::move(o));
    if (track) {
      std::vector<Poly> row(inputs.size(), Poly(ring));
      row[i] = Poly::constant(ring, Rational(1));
      b.Arows.push_back(std::move(row));
    }
    add_pairs_for(b.G.size() - 1);
  }

  while (!pairs.empty()) {
    auto it = pairs.begin();
    auto [dl, l, i, j] = *it;
    pairs.erase(it);
    const OPoly& gi = b.G[i];
    const OPoly& gj = b.G[j];
    if (!track && ev_total(l) == ev_total(gi.lm()) + ev_total(gj.lm())) {
      bool coprime = true;
      for (size_t v = 0; v < l.size(); ++v)
        if (gi.lm()[v] && gj.lm()[v]) coprime = false;
      if (coprime) continue;  // product criterion
    }
    Expvec mi = ev_sub(l, gi.lm());
    Expvec mj = ev_sub(l, gj.lm());
    Rational cj = gi.lc() / gj.lc();
    OPoly s = axpy(mono_mul(gi, Rational(1), mi), cj, mj, gj, ord);
    NFState st = nf(s, b.G, ord, ring, bud, track);
    if (st.rem.empty()) {
      if (track) {
        // unit*(x^mi e_i - cj x^mj e_j) - sum cofs_k e_k
        std::vector<Poly> row(b.G.size(), Poly(ring));
        row[i] += st.unit * Poly::monomial(ring, mi, Rational(1));
        row[j] -= st.unit * Poly::monomial(ring, mj, cj);
        for (size_t k = 0; k < b.G.size(); ++k) row[k] -= st.cofs[k];
        b.gsyz.push_back(std::move(row));
      }
      continue;
    }
    Rational lead = st.rem.lc();
    OPoly h = mono_mul(st.rem, Rational(1) / lead, ev_zero(l.size()));
    if (track) {
      std::vector<Poly> row(inputs.size(), Poly(ring));
      Poly mI = st.unit * Poly::monomial(ring, mi, Rational(1));
      Poly mJ = st.unit * Poly::monomial(ring, mj, cj);
      for (size_t t = 0; t < inputs.size(); ++t)
        row[t] = mI * b.Arows[i][t] - mJ * b.Arows[j][t];
      for (size_t k = 0; k < b.G.size(); ++k)
        if (!st.cofs[k].is_zero())
          for (size_t t = 0; t < inputs.size(); ++t)
            row[t] -= st.cofs[k] * b.Arows[k][t];
      Rational inv = Rational(1) / lead;
      for (auto& e : row) e *= inv;
      b.Arows.push_back(std::move(row));
      // keep syzygy rows aligned with the grown basis
      for (auto& srow : b.gsyz) srow.emplace_back(ring);
    }
    b.G.push_back(std::move(h));
    add_pairs_for(b.G.size() - 1);
  }
  return b;
}

// Minimal basis: leading terms pairwise non-divisible; then, for global
// orders, tails fully reduced (unique reduced basis). Local orders keep the
// minimal monic form (tail reduction need not terminate in local rings).
std::vector<OPoly> reduce_basis(std::vector<OPoly> G, const MonomialOrder& ord,
                                const RingPtr& ring, Budget& bud) {
  std::sort(G.begin(), G.end(), [&](const OPoly& a, const OPoly& b) {
    return ord.cmp(a.lm(), b.lm()) < 0;
  });
  std::vector<OPoly> kept;
  for (auto& g : G) {
    bool redundant = false;
    for (auto& k : kept)
      if (ev_divides(k.lm(), g.lm())) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(std::move(g));
  }
  for (auto& g : kept)
    if (g.lc() != 1) g = mono_mul(g, Rational(1) / g.lc(), ev_zero(g.lm().size()));
  if (!ord.is_global()) return kept;

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k < kept.size(); ++k) {
      std::vector<OPoly> others;
      for (size_t j = 0; j < kept.size(); ++j)
        if (j != k) others.push_back(kept[j]);
      NFState st = nf_global(kept[k], others, ord, ring, bud, false);
      if (!(st.rem.t == kept[k].t)) {
        changed = true;
        if (st.rem.empty()) {
          kept.erase(kept.begin() + k);
          --k;
        } else {
          kept[k] = mono_mul(st.rem, Rational(1) / st.rem.lc(),
                             ev_zero(st.rem.lm().size()));
        }
      }
    }
  }
  std::sort(kept.begin(), kept.end(), [&](const OPoly& a, const OPoly& b) {
    return ord.cmp(a.lm(), b.lm()) < 0;
  });
  return kept;
}

std::vector<OPoly> basis_opolys(const Ideal& I, const GroebnerOptions& opt) {
  const std::vector<Poly>& b = groebner_basis(I, opt);
  std::vector<OPoly> G;
  for (auto& p : b) G.push_back(to_opoly(p, I.order()));
  return G;
}

int dim_from_leading_terms(const std::vector<Expvec>& lts, size_t n) {
  for (auto& m : lts)
    if (ev_is_zero(m)) return -1;
  if (n > 16) throw ResourceLimitError("dimension: too many variables");
  int best = -1;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    int pc = __builtin_popcount(mask);
    if (pc <= best) continue;
    bool independent = true;
    for (auto& m : lts) {
      bool inside = true;
      for (size_t v = 0; v < n && inside; ++v)
        if (m[v] && !(mask & (1u << v))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = pc;
  }
  return best;
}

}  // namespace

bool Ideal::has_basis() const {
  std::lock_guard<std::mutex> lk(g_cache_mutex);
  return cache_ && cache_->basis != nullptr;
}

void Ideal::store_basis(std::vector<Poly> b) const {
  std::lock_guard<std::mutex> lk(g_cache_mutex);
  if (cache_ && !cache_->basis)
    cache_->basis = std::make_shared<const std::vector<Poly>>(std::move(b));
}

const std::vector<Poly>* Ideal::cached_basis() const {
  std::lock_guard<std::mutex> lk(g_cache_mutex);
  return cache_ && cache_->basis ? cache_->basis.get() : nullptr;
}

const std::vector<Poly>& groebner_basis(const Ideal& I,
                                        const GroebnerOptions& opt) {
  if (const auto* b = I.cached_basis()) return *b;
  Budget bud{opt.max_steps, opt.deadline};
  BasisBuild b = build_basis(I.gens(), I.order(), I.ring(), bud, false);
  std::vector<OPoly> red = reduce_basis(std::move(b.G), I.order(), I.ring(), bud);
  std::vector<Poly> out;
  for (auto& g : red) out.push_back(to_poly(g, I.ring()));
  I.store_basis(std::move(out));
  return *I.cached_basis();
}

Poly normal_form(const Poly& p, const Ideal& I, const GroebnerOptions& opt) {
  std::vector<OPoly> G = basis_opolys(I, opt);
  Budget bud{opt.max_steps, opt.deadline};
  NFState st = nf(to_opoly(p, I.order()), G, I.order(), I.ring(), bud, false);
  return to_poly(st.rem, I.ring());
}

MembershipCertificate ideal_member(const Poly& p, const Ideal& I,
                                   const GroebnerOptions& opt) {
  // Decide membership against the cached reduced basis; certify against the
  // tracked (unreduced) basis, whose rows carry exact generator cofactors.
  std::vector<OPoly> G = basis_opolys(I, opt);
  Budget bud{opt.max_steps, opt.deadline};
  NFState quick = nf(to_opoly(p, I.order()), G, I.order(), I.ring(), bud, false);

  MembershipCertificate cert;
  cert.member = quick.rem.empty();
  if (!cert.member) return cert;

  Budget bud2{opt.max_steps, opt.deadline};
  BasisBuild raw = build_basis(I.gens(), I.order(), I.ring(), bud2, true);
  Budget bud3{opt.max_steps, opt.deadline};
  NFState st = nf(to_opoly(p, I.order()), raw.G, I.order(), I.ring(), bud3, true);
  if (!st.rem.empty())
    throw std::logic_error("ideal_member: certificate reduction disagrees");
  cert.unit = st.unit;
  std::vector<Poly> total(I.gens().size(), Poly(I.ring()));
  for (size_t j = 0; j < raw.G.size(); ++j)
    if (!st.cofs[j].is_zero())
      for (size_t t = 0; t < total.size(); ++t)
        total[t] += st.cofs[j] * raw.Arows[j][t];
  cert.cofactors = std::move(total);

  // unit * p == sum cofactors_i * gens_i must hold exactly.
  Poly check = cert.unit * p;
  for (size_t t = 0; t < cert.cofactors.size(); ++t)
    check -= cert.cofactors[t] * I.gens()[t];
  if (!check.is_zero())
    throw std::logic_error("ideal_member: certificate verification failed");
  return cert;
}

Ideal eliminate_vars(const Ideal& I, const std::vector<bool>& drop,
                     const GroebnerOptions& opt) {
  Ideal work(I.ring(), I.gens(), MonomialOrder::elim(drop));
  const std::vector<Poly>& basis = groebner_basis(work, opt);
  std::vector<bool> keep(drop.size());
  for (size_t i = 0; i < drop.size(); ++i) keep[i] = !drop[i];
  RingPtr sub = I.ring()->restricted(keep);
  std::vector<Poly> out;
  for (auto& g : basis) {
    bool pure = true;
    for (size_t v = 0; v < drop.size() && pure; ++v)
      if (drop[v] && g.uses_var(int(v))) pure = false;
    if (pure) out.push_back(g.transported(sub));
  }
  return Ideal(sub, std::move(out), MonomialOrder::grevlex());
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J,
                      const GroebnerOptions& opt) {
  if (!same_ring(I.ring(), J.ring()))
    throw std::invalid_argument("ideal_intersect: ring mismatch");
  RingPtr ext = I.ring()->extended({{VarClass::Param, 99, "@t"}});
  int t = ext->require("@t");
  Poly tv = Poly::variable(ext, t);
  Poly oneMinusT = Poly::constant(ext, Rational(1)) - tv;
  std::vector<Poly> gens;
  for (auto& f : I.gens()) gens.push_back(tv * f.transported(ext));
  for (auto& g : J.gens()) gens.push_back(oneMinusT * g.transported(ext));
  std::vector<bool> drop(ext->size(), false);
  drop[t] = true;
  Ideal extIdeal(ext, std::move(gens), MonomialOrder::elim(drop));
  Ideal elim = eliminate_vars(extIdeal, drop, opt);
  std::vector<Poly> out;
  for (auto& g : elim.gens()) out.push_back(g.transported(I.ring()));
  return Ideal(I.ring(), std::move(out), I.order());
}

int krull_dim(const Ideal& I, const GroebnerOptions& opt) {
  const std::vector<Poly>& basis = groebner_basis(I, opt);
  if (basis.empty()) return int(I.ring()->size());
  std::vector<Expvec> lts;
  for (auto& g : basis) lts.push_back(to_opoly(g, I.order()).lm());
  return dim_from_leading_terms(lts, I.ring()->size());
}

QuotientBasis quotient_monomial_basis(const Ideal& I, const GroebnerOptions& opt,
                                      size_t cap) {
  QuotientBasis out;
  const std::vector<Poly>& basis = groebner_basis(I, opt);
  std::vector<Expvec> lts;
  for (auto& g : basis) lts.push_back(to_opoly(g, I.order()).lm());
  int dim = basis.empty() ? int(I.ring()->size())
                          : dim_from_leading_terms(lts, I.ring()->size());
  if (dim > 0) {
    out.finite = false;
    return out;
  }
  if (dim == -1 && !lts.empty()) {
    // improper ideal: empty quotient
    out.finite = true;
    return out;
  }
  out.finite = true;
  size_t n = I.ring()->size();
  std::set<Expvec> seen;
  std::vector<Expvec> queue{ev_zero(n)};
  auto in_lt = [&](const Expvec& m) {
    for (auto& l : lts)
      if (ev_divides(l, m)) return true;
    return false;
  };
  while (!queue.empty()) {
    Expvec m = queue.back();
    queue.pop_back();
    if (seen.count(m) || in_lt(m)) continue;
    seen.insert(m);
    if (seen.size() > cap) throw ResourceLimitError("quotient basis too large");
    for (size_t v = 0; v < n; ++v) {
      Expvec c = m;
      c[v] += 1;
      queue.push_back(std::move(c));
    }
  }
  out.monomials.assign(seen.begin(), seen.end());
  std::sort(out.monomials.begin(), out.monomials.end(),
            [](const Expvec& a, const Expvec& b) {
              long da = ev_total(a), db = ev_total(b);
              if (da != db) return da < db;
              return a < b;
            });
  return out;
}

std::vector<std::vector<Poly>> syzygies(const std::vector<Poly>& f,
                                        const GroebnerOptions& opt) {
  if (f.empty()) return {};
  RingPtr ring;
  for (auto& p : f)
    if (p.ring()) ring = p.ring();
  MonomialOrder ord = MonomialOrder::grevlex();
  Budget bud{opt.max_steps, opt.deadline};
  BasisBuild b = build_basis(f, ord, ring, bud, true);

  std::vector<std::vector<Poly>> rows;
  // zero inputs contribute unit syzygies
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) {
      std::vector<Poly> r(f.size(), Poly(ring));
      r[i] = Poly::constant(ring, Rational(1));
      rows.push_back(std::move(r));
    }
  }
  // Schreyer rows mapped back through the tracking matrix
  for (auto& s : b.gsyz) {
    std::vector<Poly> r(f.size(), Poly(ring));
    for (size_t k = 0; k < b.G.size(); ++k) {
      if (s[k].is_zero()) continue;
      for (size_t t = 0; t < f.size(); ++t) r[t] += s[k] * b.Arows[k][t];
    }
    rows.push_back(std::move(r));
  }
  // rows of (Id - B A), with B from dividing each input by the basis
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    Budget bud2{opt.max_steps, opt.deadline};
    NFState st = nf_global(to_opoly(f[i], ord), b.G, ord, ring, bud2, true);
    if (!st.rem.empty())
      throw std::logic_error("syzygies: generator failed to reduce to zero");
    std::vector<Poly> r(f.size(), Poly(ring));
    r[i] = Poly::constant(ring, Rational(1));
    for (size_t k = 0; k < b.G.size(); ++k) {
      if (st.cofs[k].is_zero()) continue;
      for (size_t t = 0; t < f.size(); ++t) r[t] -= st.cofs[k] * b.Arows[k][t];
    }
    rows.push_back(std::move(r));
  }

  // verify, drop zero rows, dedupe
  std::vector<std::vector<Poly>> out;
  std::set<std::vector<std::map<Expvec, Rational>>> seen;
  for (auto& r : rows) {
    Poly check(ring);
    bool allZero = true;
    for (size_t i = 0; i < f.size(); ++i) {
      check += r[i] * f[i];
      if (!r[i].is_zero()) allZero = false;
    }
    if (!check.is_zero()) throw std::logic_error("syzygies: row check failed");
    if (allZero) continue;
    std::vector<std::map<Expvec, Rational>> key;
    for (auto& p : r) key.push_back(p.terms());
    if (seen.insert(key).second) out.push_back(std::move(r));
  }
  return out;
}

bool is_regular_sequence(const std::vector<Poly>& f, const MonomialOrder& ord,
                         const GroebnerOptions& opt) {
  if (f.empty()) return true;
  RingPtr ring = f.front().ring();
  int n = int(ring->size());
  std::vector<Poly> prefix;
  for (size_t k = 0; k < f.size(); ++k) {
    if (f[k].is_zero())
      throw std::invalid_argument("is_regular_sequence: zero entry");
    prefix.push_back(f[k]);
    Ideal I(ring, prefix, ord);
    if (krull_dim(I, opt) != n - int(k) - 1) return false;
  }
  return true;
}

// ---- free-module layer ----------------------------------------------------

namespace {

struct MLead {
  int comp = -1;
  Expvec ev;
  Rational c;
};

MLead module_lead(const std::vector<Poly>& v, const MonomialOrder& ord) {
  MLead L;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    OPoly o = to_opoly(v[i], ord);
    L.comp = int(i);
    L.ev = o.lm();
    L.c = o.lc();
    return L;  // position over term: first nonzero component leads
  }
  return L;
}

std::vector<Poly> module_axpy(const std::vector<Poly>& a, const Rational& c,
                              const Expvec& m, const std::vector<Poly>& b,
                              const RingPtr& ring) {
  std::vector<Poly> r = a;
  Poly mono = Poly::monomial(ring, m, c);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= mono * b[i];
  return r;
}

std::vector<Poly> module_nf(std::vector<Poly> v,
                            const std::vector<std::vector<Poly>>& rows,
                            const MonomialOrder& ord, const RingPtr& ring,
                            Budget& bud) {
  for (;;) {
    MLead lv = module_lead(v, ord);
    if (lv.comp < 0) return v;
    bool reduced = false;
    for (auto& w : rows) {
      MLead lw = module_lead(w, ord);
      if (lw.comp != lv.comp || !ev_divides(lw.ev, lv.ev)) continue;
      v = module_axpy(v, lv.c / lw.c, ev_sub(lv.ev, lw.ev), w, ring);
      bud.tick();
      reduced = true;
      break;
    }
    if (!reduced) return v;
  }
}

}  // namespace

bool module_member(const std::vector<Poly>& v,
                   const std::vector<std::vector<Poly>>& rows,
                   const MonomialOrder& ord, const GroebnerOptions& opt) {
  if (rows.empty()) {
    for (auto& p : v)
      if (!p.is_zero()) return false;
    return true;
  }
  RingPtr ring;
  for (auto& r : rows)
    for (auto& p : r)
      if (p.ring()) ring = p.ring();
  Budget bud{opt.max_steps, opt.deadline};
  std::vector<std::vector<Poly>> G;
  for (auto& r : rows) {
    bool nz = false;
    for (auto& p : r) nz = nz || !p.is_zero();
    if (nz) G.push_back(r);
  }
  // Buchberger over the free module; S-pairs only within a component.
  std::vector<std::pair<size_t, size_t>> todo;
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) todo.emplace_back(i, j);
  while (!todo.empty()) {
    auto [i, j] = todo.back();
    todo.pop_back();
    MLead li = module_lead(G[i], ord), lj = module_lead(G[j], ord);
    if (li.comp != lj.comp) continue;
    Expvec l = ev_lcm(li.ev, lj.ev);
    std::vector<Poly> s =
        module_axpy(std::vector<Poly>(G[i].size(), Poly(ring)), Rational(-1),
                    ev_sub(l, li.ev), G[i], ring);
    // s = x^{l-li} G_i ; then subtract (lc_i/lc_j) x^{l-lj} G_j
    s = module_axpy(s, li.c / lj.c, ev_sub(l, lj.ev), G[j], ring);
    std::vector<Poly> h = module_nf(std::move(s), G, ord, ring, bud);
    if (module_lead(h, ord).comp >= 0) {
      size_t idx = G.size();
      G.push_back(std::move(h));
      for (size_t k = 0; k < idx; ++k) todo.emplace_back(k, idx);
    }
  }
  std::vector<Poly> r = module_nf(v, G, ord, ring, bud);
  return module_lead(r, ord).comp < 0;
}

}  // namespace dcond
