#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcond/weyl.hpp"
#include "family.hpp"

using namespace dcond;
using dcond::testing::random_rational;

namespace {

WeylOp random_op(const RingPtr& R, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> e(0, 2);
  std::uniform_int_distribution<int> nt(1, 3);
  std::uniform_int_distribution<long> c(-4, 4);
  WeylOp op(R);
  int terms = nt(rng);
  for (int t = 0; t < terms; ++t) {
    Expvec xe(R->size()), de(R->size());
    for (auto& v : xe) v = e(rng);
    for (auto& v : de) v = e(rng);
    long cv = c(rng);
    if (cv) op.add_term(xe, de, e(rng), Rational(cv));
  }
  return op;
}

TwistedElem random_elem(const RingPtr& R, std::mt19937_64& rng) {
  Poly f = Poly::variable(R, 0) + Poly::variable(R, 1);  // fixed simple twist
  Poly numer = dcond::testing::random_poly(R, rng, 3, 2);
  if (numer.is_zero()) numer = Poly::constant(R, Rational(1));
  std::vector<std::pair<Poly, int>> bases{{Poly::variable(R, 0), 1}};
  return make_twisted(numer, f, 1, bases);
}

}  // namespace

TEST_CASE("normal ordering examples") {
  RingPtr R = Ring::poly_ring({"x1", "x2"});
  CHECK(multiply_ops(WeylOp::partial(R, 0), parse_weyl_op("x1", R)) ==
        parse_weyl_op("x1*d1+1", R));
  WeylOp e = parse_weyl_op("x1*d1", R);
  CHECK(multiply_ops(e, e) == parse_weyl_op("x1^2*d1^2+x1*d1", R));
  CHECK(multiply_ops(parse_weyl_op("s*d1", R), parse_weyl_op("x1", R)) ==
        parse_weyl_op("s*x1*d1+s", R));
}

TEST_CASE("multiplication is associative and bilinear (randomized)") {
  RingPtr R = Ring::poly_ring({"x1", "x2"});
  std::mt19937_64 rng(301);
  for (int t = 0; t < 100; ++t) {
    WeylOp P = random_op(R, rng), Q = random_op(R, rng), S = random_op(R, rng);
    CHECK(multiply_ops(multiply_ops(P, Q), S) ==
          multiply_ops(P, multiply_ops(Q, S)));
    CHECK(multiply_ops(P + Q, S) == multiply_ops(P, S) + multiply_ops(Q, S));
    CHECK(multiply_ops(S, P + Q) == multiply_ops(S, P) + multiply_ops(S, Q));
  }
}

TEST_CASE("order is submultiplicative") {
  RingPtr R = Ring::poly_ring({"x1", "x2"});
  std::mt19937_64 rng(302);
  for (int t = 0; t < 100; ++t) {
    WeylOp P = random_op(R, rng), Q = random_op(R, rng);
    WeylOp PQ = multiply_ops(P, Q);
    if (!PQ.is_zero()) CHECK(PQ.order() <= P.order() + Q.order());
  }
}

TEST_CASE("action on twisted elements: defining examples") {
  RingPtr R1 = Ring::poly_ring({"x"});
  Poly x = Poly::variable(R1, 0);
  TwistedElem xs = make_twisted(Poly::constant(R1, Rational(1)), x, 0, {});

  // d . x^s = s x^s / x
  TwistedElem r = apply_to_twisted(WeylOp::partial(R1, 0), xs);
  CHECK(r.fExp == 1);
  CHECK(print_poly(r.numer) == "s");

  // (1/4) d^2 . (x^2)^{s+1} = (s+1)(s+1/2) (x^2)^s
  Poly x2 = parse_poly("x^2", R1);
  TwistedElem e1 = make_twisted(x2, x2, 0, {});  // (x^2)^{s+1}
  WeylOp quarter = parse_weyl_op("1/4*d1^2", R1);
  TwistedElem lhs = apply_to_twisted(quarter, e1);
  RingPtr xsr = lhs.xsring;
  TwistedElem rhs = make_twisted(parse_poly("(s+1)*(s+1/2)", xsr),
                                 x2.transported(xsr), 0, {});
  CHECK(twisted_equal(lhs, rhs));

  // x * (1/x) f^s = f^s
  Poly f = parse_poly("x^2", R1);
  TwistedElem inv = make_twisted(Poly::constant(R1, Rational(1)), f, 0,
                                 {{x, 1}});
  TwistedElem back = apply_to_twisted(parse_weyl_op("x", R1), inv);
  CHECK(back.bases.empty());
  CHECK(print_poly(back.numer) == "1");
}

TEST_CASE("annihilates examples") {
  RingPtr R = Ring::poly_ring({"x1", "x2"});
  Poly one = Poly::constant(R, Rational(1));
  TwistedElem nc = make_twisted(
      one, one, 0, {{Poly::variable(R, 0), 1}, {Poly::variable(R, 1), 1}});
  CHECK(annihilates(parse_weyl_op("x1*d1+x2*d2+2", R), nc));
  CHECK_FALSE(annihilates(parse_weyl_op("d1", R), nc));

  RingPtr R1 = Ring::poly_ring({"x"});
  TwistedElem xs =
      make_twisted(Poly::constant(R1, Rational(1)), Poly::variable(R1, 0), 0, {});
  CHECK_FALSE(annihilates(WeylOp::partial(R1, 0), xs));
  // ... but the Euler relation (x d - s) does
  CHECK(annihilates(parse_weyl_op("x*d1 - s", R1), xs));
}

TEST_CASE("module action law and specialization commute (randomized)") {
  RingPtr R = Ring::poly_ring({"x1", "x2"});
  std::mt19937_64 rng(303);
  for (int t = 0; t < 100; ++t) {
    WeylOp P = random_op(R, rng), Q = random_op(R, rng);
    TwistedElem e = random_elem(R, rng);
    TwistedElem viaProduct = apply_to_twisted(multiply_ops(P, Q), e);
    TwistedElem viaSteps = apply_to_twisted(P, apply_to_twisted(Q, e));
    CHECK(twisted_equal(viaProduct, viaSteps));
  }
  // substitution s := k commutes with the action for integer k
  for (int t = 0; t < 40; ++t) {
    WeylOp P = random_op(R, rng);
    TwistedElem e = random_elem(R, rng);
    long k = long(t % 7) - 3;
    TwistedElem applied = apply_to_twisted(P, e);
    int sIdx = applied.xsring->require("s");
    Poly afterSub =
        applied.numer.substitute(sIdx, Poly::constant(applied.xsring, Rational(k)));
    // substitute in the operator first: replace s by k in every term
    WeylOp Pk(R);
    for (auto& [key, c] : P.terms()) {
      Expvec xe(R->size()), de(R->size());
      for (size_t i = 0; i < R->size(); ++i) xe[i] = key[i];
      for (size_t i = 0; i < R->size(); ++i) de[i] = key[R->size() + i];
      Pk.add_term(xe, de, 0, c * rat_pow(Rational(k), unsigned(key[2 * R->size()])));
    }
    TwistedElem ek = e;
    ek.numer = e.numer.substitute(e.xsring->require("s"),
                                  Poly::constant(e.xsring, Rational(k)));
    TwistedElem appliedK = apply_to_twisted(Pk, ek);
    // the twist itself still carries s, so specialize both results at s = k
    appliedK.numer = appliedK.numer.substitute(
        appliedK.xsring->require("s"),
        Poly::constant(appliedK.xsring, Rational(k)));
    TwistedElem lhs = applied;
    lhs.numer = afterSub;
    CHECK(twisted_equal(lhs, appliedK));
  }
}

TEST_CASE("functional equation search: monomial powers") {
  RingPtr R1 = Ring::poly_ring({"x"});
  for (int p = 1; p <= 4; ++p) {
    Poly f = Poly::variable(R1, 0, p);
    auto eq = solve_functional_equation(f, Poly::constant(R1, Rational(1)), {},
                                        p, 0, p);
    REQUIRE(eq.has_value());
    std::map<Rational, int> expect;
    for (int k = 1; k <= p; ++k) expect[rat_make(-k, p)] += 1;
    CHECK(eq->b.roots == expect);
    CHECK(eq->b.leftover.empty());
    Expvec gamma{int32_t(p)};
    Rational coef = Rational(1) / rat_pow(Rational(p), unsigned(p));
    CHECK(eq->P == WeylOp::term(R1, Expvec{0}, gamma, 0, coef));
  }
}

TEST_CASE("functional equation search: sum of two squares") {
  RingPtr R = Ring::poly_ring({"x1", "x2"});
  Poly f = parse_poly("x1^2+x2^2", R);
  auto eq =
      solve_functional_equation(f, Poly::constant(R, Rational(1)), {}, 2, 0, 2);
  REQUIRE(eq.has_value());
  std::map<Rational, int> expect{{Rational(-1), 2}};
  CHECK(eq->b.roots == expect);
  CHECK(eq->P == parse_weyl_op("1/4*d1^2+1/4*d2^2", R));
}

TEST_CASE("functional equation search: x1 with minimal bounds") {
  RingPtr R1 = Ring::poly_ring({"x"});
  Poly f = Poly::variable(R1, 0);
  auto eq = solve_functional_equation(f, Poly::constant(R1, Rational(1)), {},
                                      1, 1, 1);
  REQUIRE(eq.has_value());
  CHECK(eq->b.roots == std::map<Rational, int>{{Rational(-1), 1}});
  CHECK(eq->P == parse_weyl_op("d1", R1));
}

TEST_CASE("search failure stays honest") {
  RingPtr R1 = Ring::poly_ring({"x"});
  Poly f = Poly::variable(R1, 0, 3);
  // order bound 1 cannot realize b of degree 3
  CHECK_FALSE(solve_functional_equation(f, Poly::constant(R1, Rational(1)), {},
                                        1, 0, 1)
                  .has_value());
  CHECK_THROWS_AS(solve_functional_equation(
                      Poly::constant(R1, Rational(1)) + f,
                      Poly::constant(R1, Rational(1)), {}, 1, 0, 1),
                  std::invalid_argument);
}

TEST_CASE("b-function container") {
  BFunction b = BFunction::from_coeffs(
      {Rational(1), Rational(2), Rational(1)});  // (s+1)^2
  CHECK(b.roots == std::map<Rational, int>{{Rational(-1), 2}});
  CHECK(b.degree() == 2);
  CHECK(b.smallest_root() == Rational(-1));
  CHECK(b.has_integer_root_leq(-1));
  CHECK_FALSE(b.has_integer_root_leq(-2));

  // (s+1)(s+5/6)(s+7/6) from expanded coefficients
  std::vector<Rational> c{rat_make(35, 36) /* 1*5/6*7/6 */};
  // build coefficients by multiplying out exactly
  BFunction target = BFunction::from_roots(
      {{Rational(-1), 1}, {rat_make(-5, 6), 1}, {rat_make(-7, 6), 1}});
  BFunction again = BFunction::from_coeffs(target.monic_coeffs());
  CHECK(again == target);
  CHECK(again.to_string() == "(s+7/6)(s+1)(s+5/6)");
}
