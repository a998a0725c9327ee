#pragma once

#include <optional>

#include "dcond/groebner.hpp"
#include "dcond/verdict.hpp"
#include "dcond/weights.hpp"

namespace dcond {

// Logarithmic derivation sum a_i d_i with cofactor c: sum a_i h_{x_i} = c h.
struct LogDeriv {
  std::vector<Poly> a;
  Poly c;
};

struct FreenessCertificate {
  std::vector<LogDeriv> basis;
  Poly determinant;    // det of the coefficient matrix
  Poly unitWitness;    // u with det = u*h and u(0) != 0
};

// Ring (x..., xi...) used for symbols of derivations.
RingPtr cotangent_ring(const RingPtr& xring);

// Generators of Der(-log h) as the projected syzygies of
// (h_{x_1},...,h_{x_n},-h); every row verifies its identity exactly.
std::vector<LogDeriv> derlog_generators(const Poly& h,
                                        const GroebnerOptions& opt = {});

// Saito's criterion: det of the candidate coefficient matrix equals a unit
// times h.
std::optional<FreenessCertificate> saito_free_test(
    const Poly& h, const std::vector<LogDeriv>& candidates);

// Search n-subsets of derlog_generators for a Saito basis (index order,
// first hit wins).
std::optional<FreenessCertificate> find_free_basis(const Poly& h,
                                                   const GroebnerOptions& opt = {},
                                                   size_t subsetBudget = 4096);

struct FreeSearch {
  enum class Status { Found, NotFree, Budget } status;
  std::optional<FreenessCertificate> cert;
};

// Exhaustive subset search. Because derlog_generators is a certified
// generating set, exhausting all n-subsets without a Saito basis proves the
// module is not free.
FreeSearch search_free_basis(const Poly& h, const GroebnerOptions& opt = {},
                             size_t subsetBudget = 4096);

// Principal symbols of the basis must form a regular sequence in the
// cotangent ring (local in x, global in xi).
Verdict koszul_free_test(const Poly& h, const std::vector<LogDeriv>& basis,
                         const GroebnerOptions& opt = {});

// dim of the ideal generated by the symbols of Der(-log h) equals n.
// Purity beyond the top dimension is not certified (noted in the trace).
Verdict condition_L(const Poly& h, const GroebnerOptions& opt = {});

// h lies in the ideal of its partial derivatives (local order membership).
Verdict condition_H(const Poly& h, const GroebnerOptions& opt = {});

// Symbol of a derivation as an element of the cotangent ring.
Poly derivation_symbol(const LogDeriv& d, const RingPtr& xxiRing);

bool logderiv_check(const Poly& h, const LogDeriv& d);

}  // namespace dcond
