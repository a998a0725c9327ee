#include "dcond/weights.hpp"

#include <stdexcept>

#include "dcond/linalg.hpp"

namespace dcond {

namespace {

// Strict linear inequality sum(a_i t_i) + b > 0.
struct Ineq {
  std::vector<Rational> a;
  Rational b;
};

int top_var(const Ineq& q) {
  for (size_t i = q.a.size(); i-- > 0;)
    if (q.a[i] != 0) return int(i);
  return -1;
}

}  // namespace

std::optional<WeightSystem> detect_weights(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("detect_weights: zero input");
  const RingPtr& ring = f.ring();
  std::vector<int> base = ring->indices_of(VarClass::Base);
  for (size_t i = 0; i < ring->size(); ++i)
    if (ring->var(i).cls != VarClass::Base && f.uses_var(int(i)))
      throw std::invalid_argument("detect_weights: non-base variable in input");

  size_t n = base.size();
  QMatrix A(f.term_count(), n);
  std::vector<Rational> rhs(f.term_count(), Rational(1));
  {
    size_t r = 0;
    for (auto& [ev, c] : f.terms()) {
      for (size_t k = 0; k < n; ++k) A.at(r, k) = Rational(ev[base[k]]);
      ++r;
    }
  }

  // Solve the equality system first.
  QMatrix m(A.rows, n + 1);
  for (size_t i = 0; i < A.rows; ++i) {
    for (size_t j = 0; j < n; ++j) m.at(i, j) = A.at(i, j);
    m.at(i, n) = rhs[i];
  }
  std::vector<int> pivots = kernels::rref(m);
  if (!pivots.empty() && size_t(pivots.back()) == n) return std::nullopt;

  std::vector<int> pivotRowOf(n, -1);
  for (size_t r = 0; r < pivots.size(); ++r) pivotRowOf[pivots[r]] = int(r);
  std::vector<int> freeVars;
  for (size_t j = 0; j < n; ++j)
    if (pivotRowOf[j] < 0) freeVars.push_back(int(j));
  size_t F = freeVars.size();

  // alpha_j as affine function of the free parameters t.
  auto alpha_affine = [&](size_t j, std::vector<Rational>& lin) -> Rational {
    lin.assign(F, Rational(0));
    if (pivotRowOf[j] < 0) {
      for (size_t k = 0; k < F; ++k)
        if (freeVars[k] == int(j)) lin[k] = 1;
      return Rational(0);
    }
    int r = pivotRowOf[j];
    for (size_t k = 0; k < F; ++k) lin[k] = -m.at(r, freeVars[k]);
    return m.at(r, n);
  };

  // Positivity constraints alpha_j > 0.
  std::vector<Ineq> sys;
  for (size_t j = 0; j < n; ++j) {
    Ineq q;
    q.b = alpha_affine(j, q.a);
    sys.push_back(std::move(q));
  }

  // Fourier-Motzkin from the highest parameter down; level k keeps the
  // constraints that involve only t_0..t_k.
  std::vector<std::vector<Ineq>> level(F + 1);
  for (auto& q : sys) level[size_t(top_var(q) + 1)].push_back(q);
  for (size_t k = F; k-- > 1;) {
    std::vector<Ineq> lows, highs;
    for (auto& q : level[k + 1]) {
      if (q.a[k] > 0)
        lows.push_back(q);
      else
        highs.push_back(q);
    }
    for (auto& lo : lows)
      for (auto& hi : highs) {
        // lo: a t + b > 0 with a_k > 0; hi with a_k < 0. Combine away t_k.
        Ineq q;
        q.a.assign(F, Rational(0));
        Rational s = -hi.a[k];  // positive
        for (size_t j = 0; j < F; ++j)
          q.a[j] = lo.a[j] * s + hi.a[j] * lo.a[k];
        q.b = lo.b * s + hi.b * lo.a[k];
        q.a[k] = 0;
        level[size_t(top_var(q) + 1)].push_back(std::move(q));
      }
  }
  // Constraints with no parameters must already hold.
  for (auto& q : level[0])
    if (!(q.b > 0)) return std::nullopt;

  // Deterministic back-substitution: midpoint of bounded open intervals,
  // bound +/- 1 on half-bounded ones.
  std::vector<Rational> t(F, Rational(0));
  for (size_t k = 0; k < F; ++k) {
    bool hasLo = false, hasHi = false;
    Rational lo(0), hi(0);
    for (auto& q : level[k + 1]) {
      Rational rest = q.b;
      for (size_t j = 0; j < k; ++j) rest += q.a[j] * t[j];
      // q.a[k] t_k + rest > 0
      if (q.a[k] > 0) {
        Rational bound = -rest / q.a[k];
        if (!hasLo || bound > lo) lo = bound, hasLo = true;
      } else if (q.a[k] < 0) {
        Rational bound = -rest / q.a[k];
        if (!hasHi || bound < hi) hi = bound, hasHi = true;
      } else if (!(rest > 0)) {
        return std::nullopt;  // propagated constraint failed
      }
    }
    if (hasLo && hasHi) {
      if (!(lo < hi)) return std::nullopt;
      t[k] = (lo + hi) / 2;
    } else if (hasLo) {
      t[k] = lo + 1;
    } else if (hasHi) {
      t[k] = hi - 1;
    } else {
      t[k] = 1;  // untouched parameter (variable absent from f)
    }
  }

  WeightSystem w;
  w.alpha.resize(n);
  for (size_t j = 0; j < n; ++j) {
    std::vector<Rational> lin;
    Rational c = alpha_affine(j, lin);
    for (size_t k = 0; k < F; ++k) c += lin[k] * t[k];
    if (!(c > 0)) return std::nullopt;
    w.alpha[j] = c;
  }
  // Exactness check: every monomial has weight 1.
  for (auto& [ev, c] : f.terms()) {
    if (w.monomial_weight(ev, base) != 1)
      throw std::logic_error("detect_weights: internal solve error");
  }
  return w;
}

std::optional<Rational> weighted_degree_if_homogeneous(const Poly& f,
                                                       const WeightSystem& w) {
  if (f.is_zero()) return std::nullopt;
  std::vector<int> base = f.ring()->indices_of(VarClass::Base);
  std::optional<Rational> d;
  for (auto& [ev, c] : f.terms()) {
    Rational wd = w.monomial_weight(ev, base);
    if (!d)
      d = wd;
    else if (*d != wd)
      return std::nullopt;
  }
  return d;
}

}  // namespace dcond
