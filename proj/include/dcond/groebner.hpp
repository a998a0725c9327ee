#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcond/order.hpp"
#include "dcond/poly.hpp"

namespace dcond {

// Raised when a basis computation exceeds its reduction-step budget.
// Callers translate this into Unknown verdicts, never wrong answers.
struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

struct GroebnerOptions {
  unsigned long long max_steps = 1'000'000;
  // Soft wall-clock limit; checked every few thousand reduction steps.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Generator list with an order tag and a write-once cached basis.
// Global orders cache the reduced Groebner basis (unique); local/mixed
// orders cache a minimal monic standard basis (Mora), whose leading-term
// set is the canonical one.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> gens, MonomialOrder ord)
      : ring_(std::move(ring)),
        gens_(std::move(gens)),
        ord_(std::move(ord)),
        cache_(std::make_shared<Cache>()) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }
  const MonomialOrder& order() const { return ord_; }

  bool has_basis() const;
  void store_basis(std::vector<Poly> b) const;
  const std::vector<Poly>* cached_basis() const;

 private:
  struct Cache;
  RingPtr ring_;
  std::vector<Poly> gens_;
  MonomialOrder ord_;
  std::shared_ptr<Cache> cache_;
};

struct Ideal::Cache {
  mutable std::shared_ptr<const std::vector<Poly>> basis;  // write-once
};

// Reduced (global) or minimal monic (local) basis; cached on the ideal.
const std::vector<Poly>& groebner_basis(const Ideal& I,
                                        const GroebnerOptions& opt = {});

// Weak normal form. For local/mixed orders this is Mora's tangent-cone
// reduction; the remainder's leading term is not divisible by any basis
// leading term.
Poly normal_form(const Poly& p, const Ideal& I, const GroebnerOptions& opt = {});

struct MembershipCertificate {
  bool member = false;
  // unit * p == sum_i cofactors[i] * gens[i], exactly. The unit is 1 for
  // global orders and has nonzero constant term for local ones.
  Poly unit;
  std::vector<Poly> cofactors;
};

MembershipCertificate ideal_member(const Poly& p, const Ideal& I,
                                   const GroebnerOptions& opt = {});

// Generators of I restricted to the subring without `drop` (computed with a
// block elimination order; result lives in the restricted ring, grevlex).
Ideal eliminate_vars(const Ideal& I, const std::vector<bool>& drop,
                     const GroebnerOptions& opt = {});

Ideal ideal_intersect(const Ideal& I, const Ideal& J,
                      const GroebnerOptions& opt = {});

// Dimension of the leading-term ideal by maximal independent variable sets;
// -1 for the improper ideal.
int krull_dim(const Ideal& I, const GroebnerOptions& opt = {});

struct QuotientBasis {
  bool finite = false;
  std::vector<Expvec> monomials;  // staircase complement when finite
};

QuotientBasis quotient_monomial_basis(const Ideal& I,
                                      const GroebnerOptions& opt = {},
                                      size_t cap = 1u << 20);

// Cofactor rows (a_1..a_m) with sum a_i f_i == 0, generating the full syzygy
// module (Schreyer lifting from S-pair reductions; computed with a global
// grevlex basis, which generates the local syzygy module as well).
std::vector<std::vector<Poly>> syzygies(const std::vector<Poly>& f,
                                        const GroebnerOptions& opt = {});

// Dimension-drop test for every prefix, in the ring implied by `ord`.
bool is_regular_sequence(const std::vector<Poly>& f, const MonomialOrder& ord,
                         const GroebnerOptions& opt = {});

// --- free-module layer (global orders, position-over-term) ---------------

// True iff v lies in the submodule of R^k generated by rows.
bool module_member(const std::vector<Poly>& v,
                   const std::vector<std::vector<Poly>>& rows,
                   const MonomialOrder& ord, const GroebnerOptions& opt = {});

}  // namespace dcond
