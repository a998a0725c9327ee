// Shared fixture builders and random generators for the test suites.
#pragma once

#include <random>

#include "dcond/logder.hpp"
#include "dcond/parse.hpp"

namespace dcond::testing {

// Saito fields for h = (x1 - x2 x3) g(x1, x2) with g weighted homogeneous
// for (a1, a2): the Euler-type field, the Hamiltonian-type field with the
// x3-correction, and the graph factor times d3.
inline std::vector<LogDeriv> pencil_basis(const Poly& g, const Rational& a1,
                                          const Rational& a2) {
  RingPtr R = g.ring();
  Poly x1 = Poly::variable(R, 0), x2 = Poly::variable(R, 1),
       x3 = Poly::variable(R, 2);
  Poly g1 = g.derivative(0), g2 = g.derivative(1);
  Poly w = x3 * g1 + g2;
  Poly u(R), v(R);
  for (auto& [ev, c] : w.terms()) {
    Expvec e = ev;
    if (e[0] > 0) {
      e[0] -= 1;
      u.add_term(e, c);
    } else {
      if (e[1] <= 0) throw std::logic_error("pencil: unexpected monomial");
      e[1] -= 1;
      v.add_term(e, -c);
    }
  }
  if (!(u * x1 - v * x2 == w)) throw std::logic_error("pencil: split failed");
  Poly l = x1 - x2 * x3;
  Poly h = l * g;
  std::vector<LogDeriv> basis{
      {{x1 * a1, x2 * a2, x3 * (a1 - a2)}, Poly(R)},
      {{g2, -g1, x3 * u - v}, Poly(R)},
      {{Poly(R), Poly(R), l}, Poly(R)},
  };
  for (auto& d : basis) {
    Poly num(R);
    for (int i = 0; i < 3; ++i) num += d.a[i] * h.derivative(i);
    auto q = divide_exact(num, h);
    if (!q) throw std::logic_error("pencil: field is not logarithmic");
    d.c = *q;
  }
  return basis;
}

inline Poly random_poly(const RingPtr& ring, std::mt19937_64& rng,
                        int maxTerms = 4, int maxExp = 2, long coeffBound = 5) {
  std::uniform_int_distribution<int> nt(1, maxTerms);
  std::uniform_int_distribution<int> e(0, maxExp);
  std::uniform_int_distribution<long> c(-coeffBound, coeffBound);
  Poly p(ring);
  int terms = nt(rng);
  for (int t = 0; t < terms; ++t) {
    Expvec ev(ring->size());
    for (auto& x : ev) x = e(rng);
    long cv = c(rng);
    if (cv) p.add_term(ev, Rational(cv));
  }
  return p;
}

inline Rational random_rational(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, 4);
  return rat_make(num(rng), den(rng));
}

}  // namespace dcond::testing
