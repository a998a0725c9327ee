#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dcond/groebner.hpp"
#include "dcond/parse.hpp"
#include "dcond/poly.hpp"

namespace dcond {

// Normal-ordered element of the Weyl algebra with parameter s: a finite sum
// of terms c * x^a * d^b * s^k (all x to the left of all d, s central).
// Keys are [a | b | k] over the base ring's variables.
class WeylOp {
 public:
  WeylOp() = default;
  explicit WeylOp(RingPtr xring) : xring_(std::move(xring)) {}

  static WeylOp zero(RingPtr xring) { return WeylOp(std::move(xring)); }
  static WeylOp constant(const RingPtr& xring, const Rational& c);
  static WeylOp term(const RingPtr& xring, const Expvec& xexp,
                     const Expvec& dexp, int sdeg, const Rational& c);
  static WeylOp partial(const RingPtr& xring, int var);
  // sum_i a_i d_i + c, for polynomial coefficients without s.
  static WeylOp vector_field(const std::vector<Poly>& a, const Poly& c);
  // left-multiplication by a polynomial (possibly with an s factor folded in)
  static WeylOp mul_by(const Poly& p);

  const RingPtr& xring() const { return xring_; }
  size_t nvars() const { return xring_ ? xring_->size() : 0; }
  bool is_zero() const { return t_.empty(); }
  int order() const;  // max |b|; -1 when zero
  const std::map<std::vector<int32_t>, Rational>& terms() const { return t_; }

  void add_term(const Expvec& xexp, const Expvec& dexp, int sdeg,
                const Rational& c);

  WeylOp operator-() const;
  WeylOp& operator+=(const WeylOp& o);
  WeylOp& operator-=(const WeylOp& o);
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  WeylOp& operator*=(const Rational& c);
  bool operator==(const WeylOp& o) const { return t_ == o.t_; }

  // Principal symbol in the (x, xi) ring: top-order part with d^b -> xi^b.
  // Throws if a top-order coefficient involves s.
  Poly principal_symbol(const RingPtr& xxiRing) const;

 private:
  RingPtr xring_;
  std::map<std::vector<int32_t>, Rational> t_;
};

// Normal-ordered product (Leibniz expansion of d^b x^c).
WeylOp multiply_ops(const WeylOp& P, const WeylOp& Q);

std::string print_weyl_op(const WeylOp& op);

// Reads a commutative expression in the base variables, d1..dn (one per base
// variable, in declaration order) and s; each monomial is taken as the
// normal-ordered term x^a d^b s^k.
WeylOp parse_weyl_op(const std::string& text, const RingPtr& xring);

// Element N(x,s) * f^s / (f^a * prod g_i^{e_i}) of O[1/fg, s] f^s.
// The numerator lives in the ring (x..., s).
struct TwistedElem {
  RingPtr xsring;
  Poly numer;
  Poly f;      // twisting germ, in xsring (no s)
  int fExp = 0;
  std::vector<std::pair<Poly, int>> bases;

  bool is_zero() const { return numer.is_zero(); }
};

// Ring (x..., s) for twisted numerators.
RingPtr twisted_ring(const RingPtr& xring);

TwistedElem make_twisted(const Poly& numer, const Poly& f, int fExp,
                         const std::vector<std::pair<Poly, int>>& bases);

// Exact Leibniz action; d_j(f^s) contributes s f_{x_j} f^{s-1}.
TwistedElem apply_to_twisted(const WeylOp& P, const TwistedElem& e);

// Cancel syntactically identical denominator factors from the numerator.
TwistedElem normalize_twisted(const TwistedElem& e);

// Equality by cross-multiplication after exponent alignment.
bool twisted_equal(const TwistedElem& a, const TwistedElem& b);

bool annihilates(const WeylOp& P, const TwistedElem& e,
                 const std::optional<Rational>& at_s = std::nullopt);

// Monic polynomial in s encoded by its rational roots (with multiplicity);
// any irrational part is kept as an unfactored certificate polynomial.
struct BFunction {
  std::map<Rational, int> roots;
  std::vector<Rational> leftover;  // low-to-high coefficients; empty or deg>=1

  bool fully_rational() const { return leftover.size() <= 1; }
  int degree() const;
  std::optional<Rational> smallest_root() const;
  bool has_integer_root_leq(long bound) const;  // among rational roots
  std::vector<Rational> monic_coeffs() const;   // expand to a poly in s
  std::string to_string() const;                // product form

  static BFunction from_roots(const std::map<Rational, int>& r);
  static BFunction from_coeffs(std::vector<Rational> coeffs);  // factors over Q
};

bool operator==(const BFunction& a, const BFunction& b);

struct FunctionalEquation {
  BFunction b;
  WeylOp P;
  std::vector<Rational> b_coeffs;  // monic, low-to-high
};

// Bounded search for b(s) m f^s = P(s) m f^{s+1} with m = numer/(prod g^e):
// for increasing monic degree D <= maxBDeg and order N <= maxOrder, solve the
// exact linear system over Q in the coefficients of P (|d-exp| <= N, x-degree
// <= maxCoeffDeg, s-degree <= N) and of b. Returned equations re-verify by
// exact expansion; b has minimal degree among solutions within the bounds.
std::optional<FunctionalEquation> solve_functional_equation(
    const Poly& f, const Poly& mNumer,
    const std::vector<std::pair<Poly, int>>& mBases, int maxOrder,
    int maxCoeffDeg, int maxBDeg, const GroebnerOptions& opt = {});

}  // namespace dcond
