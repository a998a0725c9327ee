#pragma once

#include <optional>
#include <vector>

#include "dcond/poly.hpp"

namespace dcond {

// Strictly positive weights per Base variable, normalized to degree 1.
struct WeightSystem {
  std::vector<Rational> alpha;  // indexed like the ring's Base variables
  Rational degree{1};

  Rational monomial_weight(const Expvec& ev,
                           const std::vector<int>& baseVars) const {
    Rational w(0);
    for (size_t k = 0; k < baseVars.size(); ++k)
      w += alpha[k] * Rational(ev[baseVars[k]]);
    return w;
  }
};

// Weighted-homogeneity detection in the given coordinates: a strictly
// positive rational alpha with <alpha, gamma> = 1 for every exponent vector
// gamma of f, or nullopt. Deterministic on underdetermined systems
// (Fourier-Motzkin with midpoint back-substitution).
std::optional<WeightSystem> detect_weights(const Poly& f);

// Weighted degree of f if f is w-homogeneous, nullopt otherwise.
std::optional<Rational> weighted_degree_if_homogeneous(const Poly& f,
                                                       const WeightSystem& w);

}  // namespace dcond
