#include "dcond/order.hpp"

namespace dcond {

namespace {

// Graded reverse lexicographic on the masked positions (empty mask = all).
int grevlex_cmp(const Expvec& a, const Expvec& b, const std::vector<bool>* mask,
                bool invert_degree = false) {
  long da = 0, db = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (mask && !(*mask)[i]) continue;
    da += a[i];
    db += b[i];
  }
  if (da != db) {
    int c = da > db ? 1 : -1;
    return invert_degree ? -c : c;
  }
  for (size_t i = a.size(); i-- > 0;) {
    if (mask && !(*mask)[i]) continue;
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int lex_cmp(const Expvec& a, const Expvec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Expvec& a, const Expvec& b) const {
  switch (kind) {
    case Kind::Grevlex:
      return grevlex_cmp(a, b, nullptr);
    case Kind::Lex:
      return lex_cmp(a, b);
    case Kind::WeightedGrevlex: {
      Rational wa(0), wb(0);
      for (size_t i = 0; i < a.size(); ++i) {
        if (a[i]) wa += weights[i] * Rational(a[i]);
        if (b[i]) wb += weights[i] * Rational(b[i]);
      }
      if (wa != wb) return wa > wb ? 1 : -1;
      return grevlex_cmp(a, b, nullptr);
    }
    case Kind::ElimBlock: {
      int c = grevlex_cmp(a, b, &mask);
      if (c) return c;
      std::vector<bool> rest(mask.size());
      for (size_t i = 0; i < mask.size(); ++i) rest[i] = !mask[i];
      return grevlex_cmp(a, b, &rest);
    }
    case Kind::LocalDs:
      return grevlex_cmp(a, b, nullptr, /*invert_degree=*/true);
    case Kind::MixedLocalGlobal: {
      int c = grevlex_cmp(a, b, &mask);
      if (c) return c;
      std::vector<bool> rest(mask.size());
      for (size_t i = 0; i < mask.size(); ++i) rest[i] = !mask[i];
      return grevlex_cmp(a, b, &rest, /*invert_degree=*/true);
    }
  }
  return 0;
}

}  // namespace dcond
