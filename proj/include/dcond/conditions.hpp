#pragma once

#include <map>

#include "dcond/bernstein.hpp"
#include "dcond/conormal.hpp"

namespace dcond {

// Lattice nodes. A_h and G have no direct decision procedure; they are fed
// by propagation only.
enum class Cond { H, B, A_h, A_inv, W, G, L, M, A_log };

const char* cond_name(Cond c);
std::optional<Cond> cond_from_name(const std::string& name);

struct LatticeContradiction : std::runtime_error {
  explicit LatticeContradiction(const std::string& what)
      : std::runtime_error(what) {}
};

struct ConditionLattice {
  std::map<Cond, Verdict> verdicts;

  VerdictState state(Cond c) const {
    auto it = verdicts.find(c);
    return it == verdicts.end() ? VerdictState::Unknown : it->second.state;
  }
  void seed(Cond c, const Verdict& v) { verdicts[c] = v; }
};

// Closure under the implication edges W=>G, G=>A(h), G=>L, A(h)=>M, L=>M,
// A(1/h)=>M, A(1/h)=>B, A(1/h)=>A_log, A_log=>B, (H and B and A(h))=>A(1/h),
// and all contrapositives. Idempotent; throws LatticeContradiction when a
// node is forced both ways.
ConditionLattice propagate_implications(ConditionLattice lattice);

// Isolated-singularity and complete-intersection certification for a factor
// list: every factor has an isolated singularity and every k-subfamily
// (k <= min(p, n)) cuts an isolated complete intersection.
Verdict verify_generic_arrangement(const std::vector<Poly>& factors,
                                   const GroebnerOptions& opt = {});

// Weight-arithmetic decision for a weighted homogeneous generic pair: holds
// iff for j = 1 or 2 no quotient basis monomial of O/(h_j + maximal minors)
// has weight d_j*k - sum(alpha) for an integer k >= 2.
Verdict corpdeux_decision(const Poly& h1, const Poly& h2, const WeightSystem& w,
                          const GroebnerOptions& opt = {});

// Order-one generation of Ann(1/h): isolated-singularity route, certified
// generic-arrangement route, and the graph-quadric times plane-curve family.
Verdict decide_A_inv(const std::vector<Poly>& factors,
                     const GroebnerOptions& opt = {});

}  // namespace dcond
