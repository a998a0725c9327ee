#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dcond/rational.hpp"
#include "dcond/ring.hpp"

namespace dcond {

// Exponent vector helpers.
inline Expvec ev_zero(size_t n) { return Expvec(n, 0); }
inline Expvec ev_add(const Expvec& a, const Expvec& b) {
  Expvec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline bool ev_divides(const Expvec& a, const Expvec& b) {  // a | b
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}
inline Expvec ev_sub(const Expvec& a, const Expvec& b) {
  Expvec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline Expvec ev_lcm(const Expvec& a, const Expvec& b) {
  Expvec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}
inline long ev_total(const Expvec& a) {
  long t = 0;
  for (auto e : a) t += e;
  return t;
}
inline bool ev_is_zero(const Expvec& a) {
  for (auto e : a)
    if (e) return false;
  return true;
}

// Sparse multivariate polynomial over Q with a dense exponent vector per
// declared ring. Terms are kept in a canonical map (lexicographic on the
// raw exponent vectors); monomial orders are applied by the groebner layer.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, const Rational& c);
  static Poly variable(const RingPtr& ring, int idx, int power = 1);
  static Poly monomial(RingPtr ring, const Expvec& ev, const Rational& c);

  const RingPtr& ring() const { return ring_; }
  const std::map<Expvec, Rational>& terms() const { return t_; }
  size_t term_count() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && ev_is_zero(t_.begin()->first));
  }
  Rational constant_term() const;
  bool is_monomial() const { return t_.size() == 1; }

  void add_term(const Expvec& ev, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly& operator*=(const Rational& c);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  bool operator==(const Poly& o) const { return t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly pow(unsigned e) const;

  // d/dx_i (exact).
  Poly derivative(int var) const;

  long total_degree() const;    // -1 for zero
  long degree_in(int var) const;
  long order_at_origin() const;  // min total degree of a term; -1 for zero

  // Coefficient of var^k as a polynomial in the remaining variables
  // (still expressed in the full ring).
  Poly coefficient_of(int var, int power) const;

  bool uses_var(int var) const;
  std::vector<bool> used_vars() const;

  Poly substitute(int var, const Poly& value) const;
  Rational eval(const std::vector<Rational>& point) const;

  // Re-express in another ring by variable-name lookup. Throws if a used
  // variable is missing in the target.
  Poly transported(const RingPtr& target) const;

  friend void swap(Poly& a, Poly& b) {
    std::swap(a.ring_, b.ring_);
    std::swap(a.t_, b.t_);
  }

 private:
  RingPtr ring_;
  std::map<Expvec, Rational> t_;  // no zero coefficients stored
};

// Exact division: q with a == q*b, if it exists.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

// Jacobian matrix: entry (i,j) = d morphism[i] / d x_{vars[j]}.
std::vector<std::vector<Poly>> jacobian(const std::vector<Poly>& morphism,
                                        const std::vector<int>& vars);

// Exact determinant of the selected submatrix, by cofactor expansion.
Poly minor_det(const std::vector<std::vector<Poly>>& m,
               const std::vector<int>& rows, const std::vector<int>& cols);

Poly det(const std::vector<std::vector<Poly>>& m);

namespace kernels {
// Thread count used by the OpenMP kernels (bulk products, exact RREF,
// corpus batches). 0 means "library default".
void set_threads(int n);
int threads();

// Serial reference and OpenMP implementations of the sparse product.
// Both produce the identical canonical term map.
Poly mul_serial(const Poly& a, const Poly& b);
Poly mul_parallel(const Poly& a, const Poly& b);
}  // namespace kernels

}  // namespace dcond
