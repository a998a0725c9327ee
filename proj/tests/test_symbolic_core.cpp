#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcond/weights.hpp"
#include "family.hpp"

using namespace dcond;
using dcond::testing::random_poly;

TEST_CASE("parse examples") {
  RingPtr R = Ring::poly_ring({"x1", "x2", "x3"});
  CHECK(parse_poly("x1^2+x2^3", R).term_count() == 2);
  Poly prod = parse_poly("(x1-x2*x3)*(x1*x2^2+x1^2*x2)", R);
  Poly expanded = parse_poly("x1^2*x2^2+x1^3*x2-x1*x2^3*x3-x1^2*x2^2*x3", R);
  CHECK(prod == expanded);
  CHECK(parse_poly("x1 - x1", R).is_zero());
  CHECK(parse_poly("1/2", R).constant_term() == rat_make(1, 2));
  CHECK_THROWS_AS(parse_poly("x1 + y", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x1 + ", R), ParseError);
  CHECK_THROWS_AS(parse_poly("x1^-2", R), ParseError);
}

TEST_CASE("print/parse round trip and ring arithmetic on random inputs") {
  RingPtr R = Ring::poly_ring({"x1", "x2", "x3"});
  std::mt19937_64 rng(101);
  for (int t = 0; t < 200; ++t) {
    Poly p = random_poly(R, rng, 5, 3);
    Poly q = random_poly(R, rng, 5, 3);
    CHECK(parse_poly(print_poly(p), R) == p);
    CHECK((p + q) - q == p);
  }
}

TEST_CASE("derivative is linear and Leibniz") {
  RingPtr R = Ring::poly_ring({"x1", "x2"});
  std::mt19937_64 rng(102);
  for (int t = 0; t < 120; ++t) {
    Poly p = random_poly(R, rng), q = random_poly(R, rng);
    for (int v = 0; v < 2; ++v) {
      CHECK((p + q).derivative(v) == p.derivative(v) + q.derivative(v));
      CHECK((p * q).derivative(v) ==
            p.derivative(v) * q + p * q.derivative(v));
    }
  }
}

TEST_CASE("jacobian examples") {
  RingPtr R = Ring::poly_ring({"x1", "x2", "x3"});
  auto J = jacobian({parse_poly("x1^2", R), parse_poly("x2^3", R)}, {0, 1});
  CHECK(J[0][0] == parse_poly("2*x1", R));
  CHECK(J[0][1].is_zero());
  CHECK(J[1][1] == parse_poly("3*x2^2", R));

  auto Jl = jacobian({parse_poly("x1-x2*x3", R)}, {0, 1, 2});
  CHECK(Jl[0][0] == parse_poly("1", R));
  CHECK(Jl[0][1] == parse_poly("-x3", R));
  CHECK(Jl[0][2] == parse_poly("-x2", R));

  auto Jc = jacobian({parse_poly("5", R)}, {0, 1, 2});
  CHECK(Jc[0][0].is_zero());
  CHECK(Jc[0][2].is_zero());
}

TEST_CASE("minor_det examples and alternating property") {
  RingPtr R = Ring::poly_ring({"x1", "x2", "x3"});
  std::vector<std::vector<Poly>> id = {
      {parse_poly("1", R), Poly(R)}, {Poly(R), parse_poly("1", R)}};
  CHECK(minor_det(id, {0, 1}, {0, 1}) == parse_poly("1", R));

  auto J = jacobian({parse_poly("x1^2+x2^3+x3^4", R),
                     parse_poly("x1^2+2*x2^3+3*x3^4", R)},
                    {0, 1, 2});
  CHECK(minor_det(J, {0, 1}, {0, 1}) == parse_poly("6*x1*x2^2", R));

  std::vector<std::vector<Poly>> rep = {J[0], J[0]};
  CHECK(minor_det(rep, {0, 1}, {0, 2}).is_zero());

  CHECK_THROWS_AS(minor_det(J, {0, 1}, {0, 5}), std::out_of_range);
  CHECK_THROWS_AS(minor_det(J, {0}, {0, 1}), std::invalid_argument);
}

TEST_CASE("detect_weights on the stated germs") {
  RingPtr R = Ring::poly_ring({"x1", "x2", "x3"});
  auto w = detect_weights(parse_poly("x1^2+x2^3+x3^4", R));
  REQUIRE(w.has_value());
  CHECK(w->alpha == std::vector<Rational>{rat_make(1, 2), rat_make(1, 3),
                                          rat_make(1, 4)});

  RingPtr R2 = Ring::poly_ring({"x1", "x2"});
  auto w2 = detect_weights(parse_poly("x1*x2^2+x1^2*x2", R2));
  REQUIRE(w2.has_value());
  CHECK(w2->alpha == std::vector<Rational>{rat_make(1, 3), rat_make(1, 3)});

  CHECK_FALSE(detect_weights(parse_poly("x1^3+x2^4+x1*x2^3", R2)).has_value());
}

TEST_CASE("detect_weights properties") {
  RingPtr R = Ring::poly_ring({"x1", "x2", "x3"});
  std::mt19937_64 rng(103);
  std::vector<std::string> germs = {"x1^2+x2^3+x3^4", "x1*x2", "x1-x2*x3",
                                    "x1^3+x2^3", "x1^4+x2^2*x3^2+x3^4"};
  for (auto& text : germs) {
    Poly f = parse_poly(text, R);
    auto w = detect_weights(f);
    if (!w) continue;
    // every monomial has weighted degree exactly 1
    std::vector<int> base = R->indices_of(VarClass::Base);
    for (auto& [ev, c] : f.terms()) CHECK(w->monomial_weight(ev, base) == 1);
    // invariant under scaling by a nonzero rational
    auto ws = detect_weights(f * rat_make(7, 3));
    REQUIRE(ws.has_value());
    CHECK(ws->alpha == w->alpha);
  }
  CHECK_THROWS_AS(detect_weights(Poly(R)), std::invalid_argument);
}

TEST_CASE("exact division") {
  RingPtr R = Ring::poly_ring({"x1", "x2", "x3"});
  Poly l = parse_poly("x1-x2*x3", R);
  Poly g = parse_poly("x1^3+x2^4", R);
  auto q = divide_exact(l * g, l);
  REQUIRE(q.has_value());
  CHECK(*q == g);
  CHECK_FALSE(divide_exact(g, l).has_value());
}
