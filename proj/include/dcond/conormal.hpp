#pragma once

#include "dcond/logder.hpp"
#include "dcond/weyl.hpp"

namespace dcond {

// Minor-based derivation attached to a morphism and an index tuple.
struct VectorField {
  RingPtr ring;
  std::vector<Poly> coeffs;  // one per ring variable

  WeylOp to_weyl() const { return WeylOp::vector_field(coeffs, Poly(ring)); }
  Poly symbol(const RingPtr& xxiRing) const;
  Poly apply(const Poly& p) const;  // as a derivation
};

// Ideal of the closure of {(x, lambda dh(x))} in the (x, xi) ring, computed
// by eliminating lambda from (xi_i - lambda h_{x_i}). When a target ring is
// supplied its cotangent variables are matched to the base variables by
// position (used for the disjoint-variable sums, where the z-block carries
// eta symbols).
Ideal conormal_ideal(const Poly& f, const GroebnerOptions& opt = {});
Ideal conormal_ideal(const Poly& f, const RingPtr& xxiRing,
                     const GroebnerOptions& opt = {});

// Ideal of the closure of {(x, xi0 + lambda df(x)) : x in V(constraints),
// xi0 conormal to V(constraints)} by eliminating all multipliers.
Ideal relative_conormal_ideal(const Poly& f, const std::vector<Poly>& constraints,
                              const GroebnerOptions& opt = {});

// Linear-type test: every basis element of the conormal ideal lies in the
// ideal of syzygy-linear forms sum a_i xi_i.
Verdict condition_W(const Poly& f, const GroebnerOptions& opt = {});

// Delta vector field of a morphism (h_1..h_r) and a tuple K of r+1 distinct
// variable indices (0-based): sum_i (-1)^i m_{K(i)} d_{k_i}, where m_{K(i)}
// is the maximal minor keeping the columns K minus k_i. Kills every h_j.
VectorField build_delta_K(const std::vector<Poly>& morphism,
                          const std::vector<int>& K);

// Annihilator generators of (1/h~) h_1^s for an arrangement with the given
// distinguished factor: Delta_K over each admissible sub-morphism containing
// the distinguished factor, multiplied on the right by the complementary
// factors.
std::vector<WeylOp> arrangement_ann_generators(const std::vector<Poly>& factors,
                                               size_t distinguished);

// Same fields written as logarithmic derivations (complementary product on
// the left), plus the Euler field of the supplied weight system.
std::vector<WeylOp> arrangement_derlog_generators(
    const std::vector<Poly>& factors, size_t distinguished,
    const WeightSystem& w);

// Ideal of the characteristic variety of D (1/h~) h_1^s: the conormal ideal
// of the distinguished factor intersected with all relative conormal ideals
// over sub-multisets of the remaining factors.
Ideal arrangement_charvariety_ideal(const std::vector<Poly>& factors,
                                    size_t distinguished,
                                    const GroebnerOptions& opt = {});

// Component-ideal generators (h_S plus augmented-morphism Delta symbols) for
// an admissible subset; used to cross-check the elimination route on
// certified generic arrangements.
std::vector<Poly> charvariety_component_generators(
    const std::vector<Poly>& factors, size_t distinguished,
    const std::vector<size_t>& subset);

// Disjoint-variable sum transport: the conormal ideal of g(x) + f(z) is
// generated by f_{z_i} eta_j - f_{z_j} eta_i, g_{x_k} eta_i - f_{z_i} xi_k
// and the generators of the conormal ideal of g.
struct SebastianiThom {
  RingPtr combinedBase;  // x..., z...
  RingPtr combinedCot;   // x..., z..., xi..., eta...
  Poly sum;              // g + f in combinedBase
  std::vector<Poly> generators;
};

SebastianiThom sebastiani_thom_generators(const std::vector<Poly>& upsilons,
                                          const Poly& g, const Poly& f);

// Mutual membership of reduced basis generators.
bool ideal_equal(const Ideal& A, const Ideal& B, const GroebnerOptions& opt = {});

}  // namespace dcond
