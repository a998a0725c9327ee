#include "dcond/poly.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace dcond {

Poly Poly::constant(RingPtr ring, const Rational& c) {
  Poly p(std::move(ring));
  if (c != 0) p.t_.emplace(ev_zero(p.ring_->size()), c);
  return p;
}

Poly Poly::variable(const RingPtr& ring, int idx, int power) {
  if (idx < 0 || size_t(idx) >= ring->size())
    throw std::out_of_range("variable index out of range");
  Expvec ev = ev_zero(ring->size());
  ev[idx] = power;
  return monomial(ring, ev, Rational(1));
}

Poly Poly::monomial(RingPtr ring, const Expvec& ev, const Rational& c) {
  Poly p(std::move(ring));
  if (ev.size() != p.ring_->size())
    throw std::invalid_argument("exponent vector size mismatch");
  if (c != 0) p.t_.emplace(ev, c);
  return p;
}

Rational Poly::constant_term() const {
  auto it = t_.find(ev_zero(ring_ ? ring_->size() : 0));
  return it == t_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Expvec& ev, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = t_.emplace(ev, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(ring_);
  for (auto& [ev, c] : t_) r.t_.emplace(ev, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!ring_) ring_ = o.ring_;
  for (auto& [ev, c] : o.t_) add_term(ev, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!ring_) ring_ = o.ring_;
  for (auto& [ev, c] : o.t_) add_term(ev, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [ev, v] : t_) v *= c;
  return *this;
}

namespace kernels {

namespace {
std::atomic<int> g_threads{0};
}

void set_threads(int n) { g_threads.store(n < 0 ? 0 : n); }
int threads() {
  int n = g_threads.load();
  return n > 0 ? n : omp_get_max_threads();
}

Poly mul_serial(const Poly& a, const Poly& b) {
  Poly r(a.ring() ? a.ring() : b.ring());
  for (auto& [ea, ca] : a.terms())
    for (auto& [eb, cb] : b.terms()) r.add_term(ev_add(ea, eb), ca * cb);
  return r;
}

Poly mul_parallel(const Poly& a, const Poly& b) {
  const auto& ta = a.terms();
  std::vector<const std::pair<const Expvec, Rational>*> rows;
  rows.reserve(ta.size());
  for (auto& t : ta) rows.push_back(&t);

  int nt = threads();
  std::vector<Poly> partial(nt, Poly(a.ring() ? a.ring() : b.ring()));
#pragma omp parallel num_threads(nt)
  {
    int id = omp_get_thread_num();
    Poly& mine = partial[id];
#pragma omp for schedule(static)
    for (long i = 0; i < long(rows.size()); ++i) {
      for (auto& [eb, cb] : b.terms())
        mine.add_term(ev_add(rows[i]->first, eb), rows[i]->second * cb);
    }
  }
  // Deterministic merge in thread index order; addition over Q is exact,
  // so the canonical map is independent of the partition anyway.
  Poly r(a.ring() ? a.ring() : b.ring());
  for (auto& p : partial) r += p;
  return r;
}

}  // namespace kernels

Poly operator*(const Poly& a, const Poly& b) {
  // Cross the parallel threshold only for genuinely big products.
  if (a.term_count() >= 256 && b.term_count() >= 16 && kernels::threads() > 1)
    return kernels::mul_parallel(a, b);
  return kernels::mul_serial(a, b);
}

Poly Poly::pow(unsigned e) const {
  Poly r = Poly::constant(ring_, Rational(1));
  Poly b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1u;
  }
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r(ring_);
  for (auto& [ev, c] : t_) {
    if (ev[var] == 0) continue;
    Expvec e = ev;
    Rational k(e[var]);
    e[var] -= 1;
    r.add_term(e, c * k);
  }
  return r;
}

long Poly::total_degree() const {
  long d = -1;
  for (auto& [ev, c] : t_) d = std::max(d, ev_total(ev));
  return d;
}

long Poly::degree_in(int var) const {
  long d = -1;
  for (auto& [ev, c] : t_) d = std::max(d, long(ev[var]));
  return d;
}

long Poly::order_at_origin() const {
  if (t_.empty()) return -1;
  long d = ev_total(t_.begin()->first);
  for (auto& [ev, c] : t_) d = std::min(d, ev_total(ev));
  return d;
}

Poly Poly::coefficient_of(int var, int power) const {
  Poly r(ring_);
  for (auto& [ev, c] : t_) {
    if (ev[var] != power) continue;
    Expvec e = ev;
    e[var] = 0;
    r.add_term(e, c);
  }
  return r;
}

bool Poly::uses_var(int var) const {
  for (auto& [ev, c] : t_)
    if (ev[var] != 0) return true;
  return false;
}

std::vector<bool> Poly::used_vars() const {
  std::vector<bool> u(ring_ ? ring_->size() : 0, false);
  for (auto& [ev, c] : t_)
    for (size_t i = 0; i < ev.size(); ++i)
      if (ev[i]) u[i] = true;
  return u;
}

Poly Poly::substitute(int var, const Poly& value) const {
  // Precompute value powers up to the needed degree.
  long d = degree_in(var);
  std::vector<Poly> pw;
  pw.push_back(Poly::constant(ring_, Rational(1)));
  for (long k = 1; k <= d; ++k) pw.push_back(pw.back() * value);
  Poly r(ring_);
  for (auto& [ev, c] : t_) {
    Expvec e = ev;
    int k = e[var];
    e[var] = 0;
    r += Poly::monomial(ring_, e, c) * pw[k];
  }
  return r;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  Rational acc(0);
  for (auto& [ev, c] : t_) {
    Rational m = c;
    for (size_t i = 0; i < ev.size(); ++i)
      if (ev[i]) m *= rat_pow(point[i], unsigned(ev[i]));
    acc += m;
  }
  return acc;
}

Poly Poly::transported(const RingPtr& target) const {
  if (same_ring(ring_, target)) {
    Poly p = *this;
    const_cast<RingPtr&>(p.ring_) = target;
    return p;
  }
  std::vector<int> where(ring_->size(), -1);
  for (size_t i = 0; i < ring_->size(); ++i)
    where[i] = target->find(ring_->var(i).name);
  Poly r(target);
  for (auto& [ev, c] : t_) {
    Expvec e = ev_zero(target->size());
    for (size_t i = 0; i < ev.size(); ++i) {
      if (!ev[i]) continue;
      if (where[i] < 0)
        throw std::invalid_argument("transport: variable " +
                                    ring_->var(i).name + " missing in target");
      e[where[i]] = ev[i];
    }
    r.add_term(e, c);
  }
  return r;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Poly::zero(a.ring() ? a.ring() : b.ring());
  // Division by the grevlex-leading term of b; remainder must come out zero.
  auto grevlex_less = [](const Expvec& x, const Expvec& y) {
    long dx = ev_total(x), dy = ev_total(y);
    if (dx != dy) return dx < dy;
    for (size_t i = x.size(); i-- > 0;)
      if (x[i] != y[i]) return x[i] > y[i];
    return false;
  };
  Expvec lmb;
  Rational lcb;
  bool first = true;
  for (auto& [ev, c] : b.terms()) {
    if (first || grevlex_less(lmb, ev)) {
      lmb = ev;
      lcb = c;
      first = false;
    }
  }
  Poly rem = a;
  Poly q(a.ring());
  while (!rem.is_zero()) {
    Expvec lmr;
    Rational lcr;
    bool f2 = true;
    for (auto& [ev, c] : rem.terms()) {
      if (f2 || grevlex_less(lmr, ev)) {
        lmr = ev;
        lcr = c;
        f2 = false;
      }
    }
    if (!ev_divides(lmb, lmr)) return std::nullopt;
    Expvec m = ev_sub(lmr, lmb);
    Rational c = lcr / lcb;
    Poly t = Poly::monomial(a.ring(), m, c);
    q += t;
    rem -= t * b;
  }
  return q;
}

std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& morphism,
                                        const std::vector<int>& vars) {
  std::vector<std::vector<Poly>> m;
  for (auto& h : morphism) {
    std::vector<Poly> row;
    for (int v : vars) row.push_back(h.derivative(v));
    m.push_back(std::move(row));
  }
  return m;
}

namespace {
Poly det_rec(const std::vector<std::vector<Poly>>& m,
             const std::vector<int>& rows, std::vector<int>& cols) {
  size_t k = rows.size();
  if (k == 1) return m[rows[0]][cols[0]];
  Poly acc(m[rows[0]][cols[0]].ring());
  std::vector<int> subRows(rows.begin() + 1, rows.end());
  for (size_t j = 0; j < k; ++j) {
    const Poly& pivot = m[rows[0]][cols[j]];
    if (pivot.is_zero()) continue;
    std::vector<int> subCols;
    for (size_t t = 0; t < k; ++t)
      if (t != j) subCols.push_back(cols[t]);
    Poly sub = det_rec(m, subRows, subCols);
    if ((j % 2) == 0)
      acc += pivot * sub;
    else
      acc -= pivot * sub;
  }
  return acc;
}
}  // namespace

Poly minor_det(const std::vector<std::vector<Poly>>& m,
               const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size())
    throw std::invalid_argument("minor_det: |rows| != |cols|");
  if (rows.empty()) throw std::invalid_argument("minor_det: empty selection");
  for (int r : rows)
    if (r < 0 || size_t(r) >= m.size())
      throw std::out_of_range("minor_det: row index");
  for (int c : cols)
    if (c < 0 || m.empty() || size_t(c) >= m[0].size())
      throw std::out_of_range("minor_det: column index");
  std::vector<int> cs = cols;
  return det_rec(m, rows, cs);
}

Poly det(const std::vector<std::vector<Poly>>& m) {
  std::vector<int> idx;
  for (size_t i = 0; i < m.size(); ++i) idx.push_back(int(i));
  return minor_det(m, idx, idx);
}

}  // namespace dcond
