#include "dcond/weyl.hpp"

#include <algorithm>
#include <sstream>

#include "dcond/linalg.hpp"

namespace dcond {

namespace {

unsigned long fact_ull(int k) {
  unsigned long r = 1;
  for (int i = 2; i <= k; ++i) r *= (unsigned long)i;
  return r;
}

unsigned long binom_ull(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (unsigned long)(n - k + i) / i;
  return r;
}

}  // namespace

WeylOp WeylOp::constant(const RingPtr& xring, const Rational& c) {
  WeylOp op(xring);
  size_t n = xring->size();
  op.add_term(ev_zero(n), ev_zero(n), 0, c);
  return op;
}

WeylOp WeylOp::term(const RingPtr& xring, const Expvec& xexp, const Expvec& dexp,
                    int sdeg, const Rational& c) {
  WeylOp op(xring);
  op.add_term(xexp, dexp, sdeg, c);
  return op;
}

WeylOp WeylOp::partial(const RingPtr& xring, int var) {
  size_t n = xring->size();
  Expvec d = ev_zero(n);
  d[var] = 1;
  return term(xring, ev_zero(n), d, 0, Rational(1));
}

WeylOp WeylOp::vector_field(const std::vector<Poly>& a, const Poly& c) {
  RingPtr ring = c.ring();
  for (auto& p : a)
    if (p.ring()) ring = p.ring();
  WeylOp op(ring);
  size_t n = ring->size();
  for (size_t j = 0; j < a.size(); ++j) {
    Expvec d = ev_zero(n);
    d[j] = 1;
    for (auto& [ev, k] : a[j].terms()) op.add_term(ev, d, 0, k);
  }
  for (auto& [ev, k] : c.terms()) op.add_term(ev, ev_zero(n), 0, k);
  return op;
}

WeylOp WeylOp::mul_by(const Poly& p) {
  WeylOp op(p.ring());
  size_t n = p.ring()->size();
  for (auto& [ev, k] : p.terms()) op.add_term(ev, ev_zero(n), 0, k);
  return op;
}

int WeylOp::order() const {
  int d = -1;
  size_t n = nvars();
  for (auto& [key, c] : t_) {
    int b = 0;
    for (size_t i = n; i < 2 * n; ++i) b += key[i];
    d = std::max(d, b);
  }
  return d;
}

void WeylOp::add_term(const Expvec& xexp, const Expvec& dexp, int sdeg,
                      const Rational& c) {
  if (c == 0) return;
  size_t n = nvars();
  std::vector<int32_t> key(2 * n + 1);
  for (size_t i = 0; i < n; ++i) key[i] = xexp[i];
  for (size_t i = 0; i < n; ++i) key[n + i] = dexp[i];
  key[2 * n] = sdeg;
  auto [it, fresh] = t_.emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

WeylOp WeylOp::operator-() const {
  WeylOp r(xring_);
  for (auto& [k, c] : t_) r.t_.emplace(k, -c);
  return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
  if (!xring_) xring_ = o.xring_;
  for (auto& [k, c] : o.t_) {
    auto [it, fresh] = t_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) t_.erase(it);
    }
  }
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) { return *this += -o; }

WeylOp& WeylOp::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [k, v] : t_) v *= c;
  return *this;
}

Poly WeylOp::principal_symbol(const RingPtr& xxiRing) const {
  int ord = order();
  size_t n = nvars();
  Poly sym(xxiRing);
  for (auto& [key, c] : t_) {
    int b = 0;
    for (size_t i = 0; i < n; ++i) b += key[n + i];
    if (b != ord) continue;
    if (key[2 * n] != 0)
      throw std::invalid_argument("principal_symbol: s in top-order term");
    Expvec ev = ev_zero(xxiRing->size());
    for (size_t i = 0; i < n; ++i) {
      if (key[i]) {
        int idx = xxiRing->require(xring_->var(i).name);
        ev[idx] = key[i];
      }
      if (key[n + i]) {
        int idx = xxiRing->require("xi" + std::to_string(i + 1));
        ev[idx] = key[n + i];
      }
    }
    sym.add_term(ev, c);
  }
  return sym;
}

WeylOp multiply_ops(const WeylOp& P, const WeylOp& Q) {
  if (!same_ring(P.xring(), Q.xring()) && !P.is_zero() && !Q.is_zero())
    throw std::invalid_argument("multiply_ops: ring mismatch");
  size_t n = P.nvars();
  WeylOp r(P.xring() ? P.xring() : Q.xring());
  for (auto& [k1, c1] : P.terms()) {
    for (auto& [k2, c2] : Q.terms()) {
      // (x^a1 d^b1 s^i)(x^a2 d^b2 s^j): commute d^b1 past x^a2 variable by
      // variable; the contraction index k runs up to min(b1, a2).
      std::vector<int> kmax(n);
      for (size_t v = 0; v < n; ++v) kmax[v] = std::min(k1[n + v], k2[v]);
      std::vector<int> kk(n, 0);
      for (;;) {
        Rational coef = c1 * c2;
        for (size_t v = 0; v < n; ++v) {
          if (!kk[v]) continue;
          coef *= Rational(binom_ull(k1[n + v], kk[v]));
          coef *= Rational(binom_ull(k2[v], kk[v]));
          coef *= Rational(fact_ull(kk[v]));
        }
        Expvec xe(n), de(n);
        for (size_t v = 0; v < n; ++v) {
          xe[v] = k1[v] + k2[v] - kk[v];
          de[v] = k1[n + v] + k2[n + v] - kk[v];
        }
        r.add_term(xe, de, k1[2 * n] + k2[2 * n], coef);
        size_t v = 0;
        while (v < n) {
          if (kk[v] < kmax[v]) {
            ++kk[v];
            break;
          }
          kk[v] = 0;
          ++v;
        }
        if (v == n) break;
      }
    }
  }
  return r;
}

std::string print_weyl_op(const WeylOp& op) {
  if (op.is_zero()) return "0";
  size_t n = op.nvars();
  std::ostringstream out;
  bool first = true;
  for (auto& [key, c] : op.terms()) {
    Rational abs = c < 0 ? Rational(-c) : c;
    std::string mono;
    for (size_t i = 0; i < n; ++i)
      if (key[i]) {
        mono += (mono.empty() ? "" : "*") + op.xring()->var(i).name;
        if (key[i] != 1) mono += "^" + std::to_string(key[i]);
      }
    if (key[2 * n]) {
      mono += (mono.empty() ? "s" : "*s");
      if (key[2 * n] != 1) mono += "^" + std::to_string(key[2 * n]);
    }
    for (size_t i = 0; i < n; ++i)
      if (key[n + i]) {
        mono += (mono.empty() ? "" : "*") + ("d" + std::to_string(i + 1));
        if (key[n + i] != 1) mono += "^" + std::to_string(key[n + i]);
      }
    std::string piece;
    if (mono.empty())
      piece = rat_to_string(abs);
    else if (abs == 1)
      piece = mono;
    else
      piece = rat_to_string(abs) + "*" + mono;
    if (first) {
      out << (c < 0 ? "-" : "") << piece;
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ") << piece;
    }
  }
  return out.str();
}

WeylOp parse_weyl_op(const std::string& text, const RingPtr& xring) {
  size_t n = xring->size();
  std::vector<VarDecl> vars = xring->vars();
  for (size_t i = 0; i < n; ++i)
    vars.push_back({VarClass::Cotangent, int(i) + 1, "d" + std::to_string(i + 1)});
  vars.push_back({VarClass::Param, 1, "s"});
  RingPtr pring = Ring::make(vars);
  Poly p = parse_poly(text, pring);
  WeylOp op(xring);
  for (auto& [ev, c] : p.terms()) {
    Expvec xe(n), de(n);
    for (size_t i = 0; i < n; ++i) xe[i] = ev[i];
    for (size_t i = 0; i < n; ++i) de[i] = ev[n + i];
    op.add_term(xe, de, ev[2 * n], c);
  }
  return op;
}

// ---- twisted elements ------------------------------------------------------

RingPtr twisted_ring(const RingPtr& xring) {
  return xring->extended({{VarClass::Param, 1, "s"}});
}

TwistedElem make_twisted(const Poly& numer, const Poly& f, int fExp,
                         const std::vector<std::pair<Poly, int>>& bases) {
  if (f.is_zero()) throw std::invalid_argument("twisted element with f = 0");
  RingPtr xs;
  if (f.ring()->find("s") >= 0)
    xs = f.ring();
  else
    xs = twisted_ring(f.ring());
  TwistedElem e;
  e.xsring = xs;
  e.numer = numer.transported(xs);
  e.f = f.transported(xs);
  e.fExp = fExp;
  for (auto& [g, k] : bases) {
    if (g.is_zero()) throw std::invalid_argument("twisted base g = 0");
    if (k > 0) e.bases.emplace_back(g.transported(xs), k);
  }
  return e;
}

namespace {

Poly bases_product(const TwistedElem& e, int skip = -1) {
  Poly r = Poly::constant(e.xsring, Rational(1));
  for (size_t i = 0; i < e.bases.size(); ++i)
    if (int(i) != skip) r = r * e.bases[i].first;
  return r;
}

// One partial derivative; var indexes the xsring.
TwistedElem d_once(const TwistedElem& e, int var) {
  int sIdx = e.xsring->require("s");
  Poly s = Poly::variable(e.xsring, sIdx);
  Poly G = bases_product(e);
  Poly fx = e.f.derivative(var);
  Poly N = e.numer.derivative(var) * e.f * G +
           e.numer * (s - Poly::constant(e.xsring, Rational(e.fExp))) * fx * G;
  for (size_t i = 0; i < e.bases.size(); ++i) {
    Poly gx = e.bases[i].first.derivative(var);
    if (gx.is_zero()) continue;
    N -= e.numer * e.f * Rational(e.bases[i].second) * gx *
         bases_product(e, int(i));
  }
  TwistedElem r = e;
  r.numer = std::move(N);
  r.fExp += 1;
  for (auto& [g, k] : r.bases) k += 1;
  return r;
}

// Raise denominators to the given exponents by multiplying the numerator.
TwistedElem raised(const TwistedElem& e, int fExp, const std::vector<int>& es) {
  TwistedElem r = e;
  if (fExp > r.fExp) {
    r.numer = r.numer * r.f.pow(unsigned(fExp - r.fExp));
    r.fExp = fExp;
  }
  for (size_t i = 0; i < r.bases.size(); ++i) {
    if (es[i] > r.bases[i].second) {
      r.numer =
          r.numer * r.bases[i].first.pow(unsigned(es[i] - r.bases[i].second));
      r.bases[i].second = es[i];
    }
  }
  return r;
}

void accumulate(TwistedElem& acc, const TwistedElem& inc) {
  int fe = std::max(acc.fExp, inc.fExp);
  std::vector<int> es(acc.bases.size());
  for (size_t i = 0; i < es.size(); ++i)
    es[i] = std::max(acc.bases[i].second, inc.bases[i].second);
  acc = raised(acc, fe, es);
  TwistedElem b = raised(inc, fe, es);
  acc.numer += b.numer;
}

}  // namespace

TwistedElem apply_to_twisted(const WeylOp& P, const TwistedElem& e) {
  size_t n = P.nvars();
  TwistedElem acc = e;
  acc.numer = Poly(e.xsring);
  int sIdx = e.xsring->require("s");
  for (auto& [key, c] : P.terms()) {
    TwistedElem cur = e;
    for (size_t v = 0; v < n; ++v) {
      int xv = e.xsring->require(P.xring()->var(v).name);
      for (int k = 0; k < key[n + v]; ++k) cur = d_once(cur, xv);
    }
    Expvec mono = ev_zero(e.xsring->size());
    for (size_t v = 0; v < n; ++v)
      mono[e.xsring->require(P.xring()->var(v).name)] = key[v];
    mono[sIdx] = key[2 * n];
    cur.numer = cur.numer * Poly::monomial(e.xsring, mono, c);
    accumulate(acc, cur);
  }
  return normalize_twisted(acc);
}

TwistedElem normalize_twisted(const TwistedElem& e) {
  TwistedElem r = e;
  if (r.numer.is_zero()) {
    r.fExp = 0;
    for (auto& [g, k] : r.bases) k = 0;
  }
  if (!r.f.is_constant()) {
    while (r.fExp > 0) {
      auto q = divide_exact(r.numer, r.f);
      if (!q) break;
      r.numer = *q;
      r.fExp -= 1;
    }
  }
  for (auto& [g, k] : r.bases) {
    if (g.is_constant()) continue;
    while (k > 0) {
      auto q = divide_exact(r.numer, g);
      if (!q) break;
      r.numer = *q;
      k -= 1;
    }
  }
  std::vector<std::pair<Poly, int>> kept;
  for (auto& [g, k] : r.bases)
    if (k > 0) kept.emplace_back(g, k);
  r.bases = std::move(kept);
  return r;
}

bool twisted_equal(const TwistedElem& a, const TwistedElem& b) {
  if (!(a.f == b.f))
    throw std::invalid_argument("twisted_equal: different twisting germs");
  auto denom = [](const TwistedElem& e) {
    Poly d = e.f.pow(unsigned(e.fExp));
    for (auto& [g, k] : e.bases) d = d * g.pow(unsigned(k));
    return d;
  };
  return a.numer * denom(b) == b.numer * denom(a);
}

bool annihilates(const WeylOp& P, const TwistedElem& e,
                 const std::optional<Rational>& at_s) {
  TwistedElem r = apply_to_twisted(P, e);
  if (!at_s) return r.numer.is_zero();
  int sIdx = r.xsring->require("s");
  Poly sub = r.numer.substitute(sIdx, Poly::constant(r.xsring, *at_s));
  return sub.is_zero();
}

// ---- b-functions -----------------------------------------------------------

int BFunction::degree() const {
  int d = 0;
  for (auto& [r, m] : roots) d += m;
  if (leftover.size() > 1) d += int(leftover.size()) - 1;
  return d;
}

std::optional<Rational> BFunction::smallest_root() const {
  if (roots.empty()) return std::nullopt;
  return roots.begin()->first;
}

bool BFunction::has_integer_root_leq(long bound) const {
  for (auto& [r, m] : roots)
    if (rat_is_integer(r) && r <= Rational(bound)) return true;
  return false;
}

std::vector<Rational> BFunction::monic_coeffs() const {
  std::vector<Rational> c{Rational(1)};
  auto mul_linear = [&c](const Rational& root) {
    std::vector<Rational> r(c.size() + 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) {
      r[i + 1] += c[i];
      r[i] -= root * c[i];
    }
    c = std::move(r);
  };
  for (auto& [root, mult] : roots)
    for (int k = 0; k < mult; ++k) mul_linear(root);
  if (leftover.size() > 1) {
    std::vector<Rational> r(c.size() + leftover.size() - 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < leftover.size(); ++j)
        r[i + j] += c[i] * leftover[j];
    c = std::move(r);
  }
  return c;
}

std::string BFunction::to_string() const {
  if (roots.empty() && leftover.size() <= 1) return "1";
  std::string out;
  for (auto& [r, m] : roots) {
    std::string lin = "(s";
    if (r < 0)
      lin += "+" + rat_to_string(Rational(-r));
    else if (r > 0)
      lin += "-" + rat_to_string(r);
    lin += ")";
    if (m != 1) lin += "^" + std::to_string(m);
    out += lin;
  }
  if (leftover.size() > 1) out += "*[irrational factor]";
  return out;
}

BFunction BFunction::from_roots(const std::map<Rational, int>& r) {
  BFunction b;
  b.roots = r;
  return b;
}

BFunction BFunction::from_coeffs(std::vector<Rational> coeffs) {
  BFunction b;
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) throw std::invalid_argument("zero polynomial b");
  Rational lead = coeffs.back();
  for (auto& c : coeffs) c /= lead;
  size_t shift = 0;
  while (shift < coeffs.size() && coeffs[shift] == 0) ++shift;
  if (shift) {
    b.roots[Rational(0)] = int(shift);
    coeffs.erase(coeffs.begin(), coeffs.begin() + shift);
  }
  auto eval = [](const std::vector<Rational>& c, const Rational& x) {
    Rational acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  };
  auto deflate = [](std::vector<Rational>& c, const Rational& r) {
    std::vector<Rational> q(c.size() - 1, Rational(0));
    Rational carry = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) {
      q[i] = carry;
      carry = c[i] + carry * r;
    }
    c = std::move(q);
  };
  while (coeffs.size() > 1) {
    mpz_class den(1);
    for (auto& c : coeffs)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    mpz_class a0 = Rational(coeffs.front() * Rational(den)).get_num();
    mpz_class an = Rational(coeffs.back() * Rational(den)).get_num();
    mpz_class a0a = abs(a0), ana = abs(an);
    if (!a0a.fits_slong_p() || !ana.fits_slong_p()) break;
    long p0 = a0a.get_si(), pn = ana.get_si();
    bool found = false;
    for (long p = 1; p <= p0 && !found; ++p) {
      if (p0 % p) continue;
      for (long q = 1; q <= pn && !found; ++q) {
        if (pn % q) continue;
        for (int sign = 0; sign < 2 && !found; ++sign) {
          Rational r = rat_make(sign ? -p : p, q);
          if (eval(coeffs, r) == 0) {
            b.roots[r] += 1;
            deflate(coeffs, r);
            found = true;
          }
        }
      }
    }
    if (!found) break;
  }
  if (coeffs.size() > 1) b.leftover = std::move(coeffs);
  return b;
}

bool operator==(const BFunction& a, const BFunction& b) {
  return a.roots == b.roots && a.leftover == b.leftover;
}

// ---- functional-equation search --------------------------------------------

std::optional<FunctionalEquation> solve_functional_equation(
    const Poly& f, const Poly& mNumer,
    const std::vector<std::pair<Poly, int>>& mBases, int maxOrder,
    int maxCoeffDeg, int maxBDeg, const GroebnerOptions&) {
  if (f.is_zero() || f.constant_term() != 0)
    throw std::invalid_argument("solve_functional_equation: need f(0)=0, f!=0");
  RingPtr xring = f.ring();
  size_t n = xring->size();
  TwistedElem E0 = make_twisted(mNumer, f, 0, mBases);
  TwistedElem E1 = E0;
  E1.numer = E1.numer * E1.f;
  int sIdx = E0.xsring->require("s");

  auto enum_exps = [&](int bound) {
    std::vector<Expvec> out;
    Expvec cur = ev_zero(n);
    auto rec = [&](auto&& self, size_t pos, int left) -> void {
      if (pos == n) {
        out.push_back(cur);
        return;
      }
      for (int e = 0; e <= left; ++e) {
        cur[pos] = e;
        self(self, pos + 1, left - e);
        cur[pos] = 0;
      }
    };
    rec(rec, 0, bound);
    std::sort(out.begin(), out.end(), [](const Expvec& a, const Expvec& b) {
      long da = ev_total(a), db = ev_total(b);
      if (da != db) return da < db;
      return a < b;
    });
    return out;
  };

  for (int D = 0; D <= maxBDeg; ++D) {
    for (int N = 1; N <= maxOrder; ++N) {
      std::vector<Expvec> dexps = enum_exps(N);
      std::vector<Expvec> xexps = enum_exps(maxCoeffDeg);

      struct Col {
        Expvec xe, de;
        int k;
        Poly numer;
      };
      std::vector<Col> cols;

      int targetF = N;
      std::vector<int> targetE(E0.bases.size());
      for (size_t i = 0; i < targetE.size(); ++i)
        targetE[i] = E0.bases[i].second + N;

      for (auto& de : dexps) {
        TwistedElem cur = E1;
        for (size_t v = 0; v < n; ++v) {
          int xv = E0.xsring->require(xring->var(v).name);
          for (int k = 0; k < de[v]; ++k) cur = d_once(cur, xv);
        }
        cur = raised(cur, targetF, targetE);
        for (auto& xe : xexps) {
          for (int k = 0; k <= N; ++k) {
            Expvec mono = ev_zero(E0.xsring->size());
            for (size_t v = 0; v < n; ++v)
              mono[E0.xsring->require(xring->var(v).name)] = xe[v];
            mono[sIdx] = k;
            Col c;
            c.xe = xe;
            c.de = de;
            c.k = k;
            c.numer = cur.numer * Poly::monomial(E0.xsring, mono, Rational(1));
            cols.push_back(std::move(c));
          }
        }
      }
      std::sort(cols.begin(), cols.end(), [](const Col& a, const Col& b) {
        long da = ev_total(a.de), db = ev_total(b.de);
        if (da != db) return da < db;
        if (a.de != b.de) return a.de < b.de;
        long xa = ev_total(a.xe), xb = ev_total(b.xe);
        if (xa != xb) return xa < xb;
        if (a.xe != b.xe) return a.xe < b.xe;
        return a.k < b.k;
      });

      TwistedElem E0r = raised(E0, targetF, targetE);
      std::vector<Poly> bcols;
      for (int d = 0; d <= D; ++d) {
        Expvec mono = ev_zero(E0.xsring->size());
        mono[sIdx] = d;
        bcols.push_back(E0r.numer * Poly::monomial(E0.xsring, mono, Rational(1)));
      }

      std::map<Expvec, size_t> rowOf;
      auto index_rows = [&](const Poly& p) {
        for (auto& [ev, c] : p.terms()) rowOf.emplace(ev, rowOf.size());
      };
      for (auto& c : cols) index_rows(c.numer);
      for (auto& p : bcols) index_rows(p);

      size_t nCols = size_t(D) + cols.size();
      QMatrix A(rowOf.size(), nCols);
      std::vector<Rational> rhs(rowOf.size(), Rational(0));
      for (int d = 0; d < D; ++d)
        for (auto& [ev, c] : bcols[d].terms()) A.at(rowOf[ev], d) = -c;
      for (size_t j = 0; j < cols.size(); ++j)
        for (auto& [ev, c] : cols[j].numer.terms())
          A.at(rowOf[ev], D + j) = c;
      for (auto& [ev, c] : bcols[D].terms()) rhs[rowOf[ev]] = c;

      auto sol = solve_linear(A, rhs);
      if (!sol) continue;

      std::vector<Rational> bcoeffs((*sol).begin(), (*sol).begin() + D);
      bcoeffs.push_back(Rational(1));
      WeylOp P(xring);
      for (size_t j = 0; j < cols.size(); ++j)
        if ((*sol)[D + j] != 0)
          P.add_term(cols[j].xe, cols[j].de, cols[j].k, (*sol)[D + j]);

      TwistedElem lhs = apply_to_twisted(P, E1);
      Poly bPoly(E0.xsring);
      for (size_t d = 0; d < bcoeffs.size(); ++d) {
        Expvec mono = ev_zero(E0.xsring->size());
        mono[sIdx] = int(d);
        bPoly.add_term(mono, bcoeffs[d]);
      }
      TwistedElem rhsElem = E0;
      rhsElem.numer = rhsElem.numer * bPoly;
      if (!twisted_equal(lhs, rhsElem))
        throw std::logic_error("functional equation failed re-verification");

      FunctionalEquation eq;
      eq.b = BFunction::from_coeffs(bcoeffs);
      eq.P = P;
      eq.b_coeffs = bcoeffs;
      return eq;
    }
  }
  return std::nullopt;
}

}  // namespace dcond
