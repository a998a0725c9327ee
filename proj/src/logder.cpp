#include "dcond/logder.hpp"

#include <algorithm>

#include "dcond/parse.hpp"

namespace dcond {

RingPtr cotangent_ring(const RingPtr& xring) {
  std::vector<VarDecl> extra;
  size_t n = xring->size();
  for (size_t i = 0; i < n; ++i)
    extra.push_back({VarClass::Cotangent, int(i) + 1, "xi" + std::to_string(i + 1)});
  return xring->extended(extra);
}

bool logderiv_check(const Poly& h, const LogDeriv& d) {
  Poly acc(h.ring());
  for (size_t i = 0; i < d.a.size(); ++i) acc += d.a[i] * h.derivative(int(i));
  return acc == d.c * h;
}

std::vector<LogDeriv> derlog_generators(const Poly& h,
                                        const GroebnerOptions& opt) {
  if (h.is_zero()) throw std::invalid_argument("derlog_generators: h = 0");
  RingPtr ring = h.ring();
  size_t n = ring->size();
  std::vector<Poly> gens;
  for (size_t i = 0; i < n; ++i) gens.push_back(h.derivative(int(i)));
  gens.push_back(-h);
  std::vector<std::vector<Poly>> rows = syzygies(gens, opt);
  std::vector<LogDeriv> out;
  for (auto& r : rows) {
    LogDeriv d;
    d.a.assign(r.begin(), r.begin() + n);
    d.c = r[n];
    bool allZero = d.c.is_zero();
    for (auto& p : d.a) allZero = allZero && p.is_zero();
    if (allZero) continue;
    if (!logderiv_check(h, d))
      throw std::logic_error("derlog_generators: identity check failed");
    out.push_back(std::move(d));
  }
  return out;
}

std::optional<FreenessCertificate> saito_free_test(
    const Poly& h, const std::vector<LogDeriv>& candidates) {
  size_t n = h.ring()->size();
  if (candidates.size() != n)
    throw std::invalid_argument("saito_free_test: need n candidate fields");
  for (auto& d : candidates)
    if (!logderiv_check(h, d))
      throw std::invalid_argument("saito_free_test: candidate is not logarithmic");
  std::vector<std::vector<Poly>> m;
  for (auto& d : candidates) m.push_back(d.a);
  Poly dt = det(m);
  auto u = divide_exact(dt, h);
  if (!u || u->is_zero() || u->constant_term() == 0) return std::nullopt;
  FreenessCertificate cert;
  cert.basis = candidates;
  cert.determinant = dt;
  cert.unitWitness = *u;
  return cert;
}

FreeSearch search_free_basis(const Poly& h, const GroebnerOptions& opt,
                             size_t subsetBudget) {
  std::vector<LogDeriv> gens = derlog_generators(h, opt);
  size_t n = h.ring()->size();
  if (gens.size() < n) return {FreeSearch::Status::NotFree, std::nullopt};
  std::vector<size_t> idx(n);
  for (size_t i = 0; i < n; ++i) idx[i] = i;
  size_t tried = 0;
  for (;;) {
    if (tried++ >= subsetBudget)
      return {FreeSearch::Status::Budget, std::nullopt};
    std::vector<LogDeriv> cand;
    for (size_t i : idx) cand.push_back(gens[i]);
    if (auto cert = saito_free_test(h, cand))
      return {FreeSearch::Status::Found, cert};
    // next combination in lexicographic order
    int pos = int(n) - 1;
    while (pos >= 0 && idx[pos] == gens.size() - n + pos) --pos;
    if (pos < 0) return {FreeSearch::Status::NotFree, std::nullopt};
    ++idx[pos];
    for (size_t j = pos + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::optional<FreenessCertificate> find_free_basis(const Poly& h,
                                                   const GroebnerOptions& opt,
                                                   size_t subsetBudget) {
  return search_free_basis(h, opt, subsetBudget).cert;
}

Poly derivation_symbol(const LogDeriv& d, const RingPtr& xxiRing) {
  Poly sym(xxiRing);
  for (size_t i = 0; i < d.a.size(); ++i) {
    if (d.a[i].is_zero()) continue;
    Poly xi = Poly::variable(xxiRing, xxiRing->require("xi" + std::to_string(i + 1)));
    sym += d.a[i].transported(xxiRing) * xi;
  }
  return sym;
}

namespace {

MonomialOrder conormal_mixed_order(const RingPtr& xxiRing) {
  std::vector<bool> globalBlock(xxiRing->size(), false);
  for (size_t i = 0; i < xxiRing->size(); ++i)
    globalBlock[i] = xxiRing->var(i).cls != VarClass::Base;
  return MonomialOrder::mixed(globalBlock);
}

}  // namespace

Verdict koszul_free_test(const Poly& h, const std::vector<LogDeriv>& basis,
                         const GroebnerOptions& opt) {
  RingPtr xxi = cotangent_ring(h.ring());
  std::vector<Poly> symbols;
  for (auto& d : basis) symbols.push_back(derivation_symbol(d, xxi));
  try {
    bool reg = is_regular_sequence(symbols, conormal_mixed_order(xxi), opt);
    if (reg)
      return Verdict::make_holds("koszul",
                                 "principal symbols form a regular sequence");
    return Verdict::make_fails("koszul",
                               "principal symbols are not a regular sequence");
  } catch (const ResourceLimitError& e) {
    return Verdict::make_unknown(e.what());
  }
}

Verdict condition_L(const Poly& h, const GroebnerOptions& opt) {
  if (h.is_zero()) throw std::invalid_argument("condition_L: h = 0");
  try {
    std::vector<LogDeriv> gens = derlog_generators(h, opt);
    RingPtr xxi = cotangent_ring(h.ring());
    std::vector<Poly> symbols;
    for (auto& d : gens) symbols.push_back(derivation_symbol(d, xxi));
    Ideal I(xxi, symbols, conormal_mixed_order(xxi));
    int dim = krull_dim(I, opt);
    int n = int(h.ring()->size());
    if (dim == n) {
      Verdict v = Verdict::make_holds(
          "log-charvar-dim", "logarithmic characteristic variety has dimension " +
                                 std::to_string(n));
      v.note("purity", "purity beyond top dimension unchecked");
      return v;
    }
    return Verdict::make_fails(
        "log-charvar-dim",
        "dimension " + std::to_string(dim) + " exceeds n = " + std::to_string(n));
  } catch (const ResourceLimitError& e) {
    return Verdict::make_unknown(e.what());
  }
}

Verdict condition_H(const Poly& h, const GroebnerOptions& opt) {
  if (h.is_zero() || h.constant_term() != 0)
    throw std::invalid_argument("condition_H: need h(0)=0, h != 0");
  RingPtr ring = h.ring();
  size_t n = ring->size();
  std::vector<Poly> jac;
  for (size_t i = 0; i < n; ++i) jac.push_back(h.derivative(int(i)));
  Ideal J(ring, jac, MonomialOrder::local_ds());
  try {
    MembershipCertificate cert = ideal_member(h, J, opt);
    if (cert.member) {
      Verdict v = Verdict::make_holds("jacobian-membership",
                                      "h lies in its Jacobian ideal (local)");
      v.note("certificate-unit", print_poly(cert.unit));
      return v;
    }
    return Verdict::make_fails("jacobian-membership",
                               "h is not in its Jacobian ideal (local)");
  } catch (const ResourceLimitError& e) {
    return Verdict::make_unknown(e.what());
  }
}

}  // namespace dcond
