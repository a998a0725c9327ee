#pragma once

#include <vector>

#include "dcond/poly.hpp"

namespace dcond {

// Term orders for the Groebner layer. Global kinds are well-orders
// (Buchberger); LocalDs and Mixed are semigroup orders with 1 maximal on the
// local block (Mora normal form).
struct MonomialOrder {
  enum class Kind {
    Grevlex,
    Lex,
    WeightedGrevlex,   // exact rational weights, grevlex tie-break
    ElimBlock,         // block in `mask` compared first (grevlex), then rest
    LocalDs,           // negative total degree, grevlex tie-break
    MixedLocalGlobal,  // `mask` block global grevlex first, complement LocalDs
  };

  Kind kind = Kind::Grevlex;
  std::vector<Rational> weights;  // WeightedGrevlex, aligned to ring vars
  std::vector<bool> mask;         // ElimBlock / MixedLocalGlobal

  static MonomialOrder grevlex() { return {}; }
  static MonomialOrder lex() { return {Kind::Lex, {}, {}}; }
  static MonomialOrder weighted(std::vector<Rational> w) {
    return {Kind::WeightedGrevlex, std::move(w), {}};
  }
  static MonomialOrder elim(std::vector<bool> drop) {
    return {Kind::ElimBlock, {}, std::move(drop)};
  }
  static MonomialOrder local_ds() { return {Kind::LocalDs, {}, {}}; }
  static MonomialOrder mixed(std::vector<bool> globalBlock) {
    return {Kind::MixedLocalGlobal, {}, std::move(globalBlock)};
  }

  bool is_global() const {
    return kind != Kind::LocalDs && kind != Kind::MixedLocalGlobal;
  }

  // +1 if a > b, 0 if equal, -1 if a < b.
  int cmp(const Expvec& a, const Expvec& b) const;
};

}  // namespace dcond
