#pragma once

#include <set>

#include "dcond/verdict.hpp"
#include "dcond/weights.hpp"
#include "dcond/weyl.hpp"

namespace dcond {

struct MilnorData {
  bool isolated = false;
  std::vector<Expvec> basis;        // monomial basis of O/J_f when finite
  std::vector<Rational> weights;    // weighted degrees (empty without weights)
  size_t milnorNumber = 0;
};

// Monomial basis of the Jacobian quotient under a weighted-graded order when
// weights are supplied, a local order otherwise. isolated=false when the
// quotient is infinite.
MilnorData milnor_data(const Poly& f, const std::optional<WeightSystem>& w,
                       const GroebnerOptions& opt = {});

struct MonomialBs {
  BFunction b;
  WeylOp P;  // prod gamma_i^{-gamma_i} d_i^{gamma_i}
};

// Closed form for x^gamma: roots prod_i prod_{k<=gamma_i} (s + k/gamma_i).
MonomialBs bs_monomial(const RingPtr& xring, const Expvec& gamma);

// Exponent-set closed form for a weighted homogeneous isolated singularity:
// roots {-1} together with {-(|alpha| + w)} over the distinct Milnor weights.
std::optional<BFunction> bs_quasihomogeneous(const Poly& f,
                                             const GroebnerOptions& opt = {});

struct Restriction {
  Poly restricted;  // in the (n-1)-variable subring
  int removedVar;
};

// Substitute the graph variable of l = c x_i + q(other vars); the output is
// the germ h restricted to {l = 0}.
std::optional<Restriction> restrict_at_smooth_factor(const Poly& h,
                                                     const Poly& l);

// Root set of b(m f^{ps}, s) from that of b(m f^s, s): {(r - i)/p}.
std::set<Rational> rescale_roots(const std::set<Rational>& roots, unsigned p);

// Rule identifiers for decide_B; removable one by one for ablation tests.
enum BRule : uint32_t {
  kBMono = 1u << 0,
  kBArr = 1u << 1,
  kBQh = 1u << 2,
  kBPlane = 1u << 3,
  kBCourbe = 1u << 4,
  kBSmoothFactor = 1u << 5,
  kBPower = 1u << 6,
  kBOrigin = 1u << 7,
  kBMany = 1u << 8,
};
constexpr uint32_t kAllBRules = (1u << 9) - 1;

struct BOptions {
  uint32_t rules = kAllBRules;
  GroebnerOptions groebner;
  int maxDepth = 12;
};

struct BVerdict {
  Verdict verdict;
  std::optional<BFunction> roots;  // present when a closed form applied
};

// Rule engine for condition B; factored input preserves the factorization.
BVerdict decide_B(const std::vector<Poly>& factors, const BOptions& opt = {});
BVerdict decide_B(const Poly& h, const BOptions& opt = {});

// Limited factor extraction: per-variable monomial content and graph-quadric
// factors x_a - x_b x_c found by exact division.
std::vector<Poly> split_known_factors(const Poly& h);

// Squarefree test for a germ in at most two used variables (dimension of the
// ideal (g, dg) is at most zero).
bool is_squarefree_curve(const Poly& g, const GroebnerOptions& opt = {});

// Re-express in the subring of variables that actually appear.
Poly shrink_to_support(const Poly& h);

}  // namespace dcond
