#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dcond {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator) through arithmetic; raw num/den writes must call
// canonicalize(), which rat_make below does.
using Rational = mpq_class;

inline Rational rat_make(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

inline bool rat_is_integer(const Rational& q) {
  return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0;
}

// Floor of an exact rational as a long (fits for everything at desk scale).
inline long rat_floor_long(const Rational& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("rational floor overflow");
  return f.get_si();
}

inline Rational rat_pow(const Rational& q, unsigned e) {
  Rational r(1);
  Rational b = q;
  unsigned k = e;
  while (k) {
    if (k & 1u) r *= b;
    b *= b;
    k >>= 1u;
  }
  return r;
}

}  // namespace dcond
