#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcond/groebner.hpp"
#include "family.hpp"

using namespace dcond;
using dcond::testing::random_poly;
using dcond::testing::random_rational;

TEST_CASE("basis examples") {
  RingPtr R = Ring::poly_ring({"x1", "x2"});
  Ideal dup(R, {parse_poly("x1", R), parse_poly("x1", R)},
            MonomialOrder::grevlex());
  CHECK(groebner_basis(dup) == std::vector<Poly>{parse_poly("x1", R)});

  RingPtr Rx = Ring::poly_ring({"x1", "x2", "xi1", "xi2"});
  Ideal spair(Rx, {parse_poly("x2*xi1-x1*xi2", Rx), parse_poly("xi2", Rx)},
              MonomialOrder::lex());
  bool found = false;
  for (auto& g : groebner_basis(spair))
    if (g == parse_poly("x2*xi1", Rx)) found = true;
  CHECK(found);

  Ideal monic(R, {parse_poly("2*x1", R), parse_poly("3*x2^2", R)},
              MonomialOrder::grevlex());
  CHECK(groebner_basis(monic) ==
        std::vector<Poly>{parse_poly("x1", R), parse_poly("x2^2", R)});
}

TEST_CASE("membership with certificates, global and local") {
  RingPtr R = Ring::poly_ring({"x1", "x2"});
  Ideal I(R, {parse_poly("x1", R)}, MonomialOrder::grevlex());
  auto cert = ideal_member(parse_poly("x1^2", R), I);
  CHECK(cert.member);
  CHECK(cert.unit == parse_poly("1", R));
  CHECK(cert.cofactors[0] * parse_poly("x1", R) == parse_poly("x1^2", R));

  CHECK_FALSE(ideal_member(parse_poly("x1", R),
                           Ideal(R, {parse_poly("x1^2", R), parse_poly("x2", R)},
                                 MonomialOrder::grevlex()))
                  .member);

  // the pencil germ lies in its Jacobian ideal locally
  RingPtr R3 = Ring::poly_ring({"x1", "x2", "x3"});
  Poly h = parse_poly("(x1-x2*x3)*(x1^3+x2^4)", R3);
  std::vector<Poly> jac{h.derivative(0), h.derivative(1), h.derivative(2)};
  Ideal J(R3, jac, MonomialOrder::local_ds());
  auto c2 = ideal_member(h, J);
  CHECK(c2.member);
  CHECK(c2.unit.constant_term() != 0);
  Poly lhs = c2.unit * h;
  for (size_t i = 0; i < jac.size(); ++i) lhs -= c2.cofactors[i] * jac[i];
  CHECK(lhs.is_zero());
}

TEST_CASE("random combination membership (engine property)") {
  RingPtr R = Ring::poly_ring({"x1", "x2", "x3"});
  std::mt19937_64 rng(201);
  for (int t = 0; t < 100; ++t) {
    std::vector<Poly> gens;
    for (int i = 0; i < 3; ++i) {
      Poly g = random_poly(R, rng, 3, 2);
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    Ideal I(R, gens, MonomialOrder::grevlex());
    Poly combo(R);
    for (auto& g : gens) combo += random_poly(R, rng, 2, 1) * g;
    CHECK(normal_form(combo, I).is_zero());
  }
}

TEST_CASE("elimination examples and the parametrization property") {
  RingPtr R = Ring::poly_ring({"x1", "x2", "xi1", "xi2", "lam"});
  int lam = R->require("lam");
  Ideal I(R, {parse_poly("xi1-2*lam*x1", R), parse_poly("xi2-3*lam*x2^2", R)},
          MonomialOrder::grevlex());
  std::vector<bool> drop(R->size(), false);
  drop[lam] = true;
  Ideal E = eliminate_vars(I, drop);
  REQUIRE(E.gens().size() == 1);
  // up to the monic normalization this is 3 x2^2 xi1 - 2 x1 xi2
  Poly expected = parse_poly("x2^2*xi1-2/3*x1*xi2", E.ring());
  CHECK(E.gens()[0] == expected);

  // graph elimination
  RingPtr Rt = Ring::poly_ring({"t", "x1", "x2"});
  std::vector<bool> dropT(Rt->size(), false);
  dropT[0] = true;
  Ideal graph(Rt, {parse_poly("t-x1", Rt), parse_poly("x2-t^2", Rt)},
              MonomialOrder::grevlex());
  Ideal Eg = eliminate_vars(graph, dropT);
  REQUIRE(Eg.gens().size() == 1);
  CHECK(Eg.gens()[0] == parse_poly("x1^2-x2", Eg.ring()));

  // eliminating nothing returns the same ideal
  Ideal E0 = eliminate_vars(I, std::vector<bool>(R->size(), false));
  for (auto& g : I.gens())
    CHECK(normal_form(g.transported(E0.ring()), E0).is_zero());
  Ideal Iback(R, I.gens(), MonomialOrder::grevlex());
  for (auto& g : E0.gens())
    CHECK(normal_form(g.transported(R), Iback).is_zero());

  // randomized parametrization check: output vanishes under xi = lam grad f
  std::mt19937_64 rng(202);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> pt(R->size());
    for (auto& v : pt) v = random_rational(rng);
    // xi1 := 2 lam x1, xi2 := 3 lam x2^2
    pt[R->require("xi1")] = Rational(2) * pt[lam] * pt[R->require("x1")];
    pt[R->require("xi2")] =
        Rational(3) * pt[lam] * pt[R->require("x2")] * pt[R->require("x2")];
    for (auto& g : E.gens()) {
      std::vector<Rational> sub(E.ring()->size());
      for (size_t i = 0; i < E.ring()->size(); ++i)
        sub[i] = pt[R->require(E.ring()->var(i).name)];
      CHECK(g.eval(sub) == 0);
    }
  }
}

TEST_CASE("intersection examples and membership property") {
  RingPtr R = Ring::poly_ring({"x1", "x2"});
  Ideal A(R, {parse_poly("x1", R)}, MonomialOrder::grevlex());
  Ideal B(R, {parse_poly("x2", R)}, MonomialOrder::grevlex());
  Ideal C = ideal_intersect(A, B);
  REQUIRE(C.gens().size() == 1);
  CHECK(C.gens()[0] == parse_poly("x1*x2", R));

  Ideal selfI = ideal_intersect(A, A);
  CHECK(normal_form(parse_poly("x1", R), selfI).is_zero());

  std::mt19937_64 rng(203);
  for (int t = 0; t < 40; ++t) {
    Poly f = random_poly(R, rng, 2, 2), g = random_poly(R, rng, 2, 2);
    if (f.is_zero() || g.is_zero()) continue;
    Ideal I1(R, {f}, MonomialOrder::grevlex());
    Ideal I2(R, {g}, MonomialOrder::grevlex());
    Ideal J = ideal_intersect(I1, I2);
    for (auto& m : J.gens()) {
      CHECK(ideal_member(m, I1).member);
      CHECK(ideal_member(m, I2).member);
    }
  }
}

TEST_CASE("krull dimension") {
  RingPtr R = Ring::poly_ring({"x1", "x2", "xi1", "xi2"});
  Ideal I(R, {parse_poly("xi1", R), parse_poly("xi2", R)},
          MonomialOrder::grevlex());
  CHECK(krull_dim(I) == 2);

  RingPtr Rm = Ring::poly_ring({"x1", "x2", "x3"});
  CHECK(krull_dim(Ideal(Rm, {}, MonomialOrder::grevlex())) == 3);
  CHECK(krull_dim(Ideal(Rm, {parse_poly("1", Rm)}, MonomialOrder::grevlex())) ==
        -1);

  // k coordinate hyperplanes in m variables: dimension m - k
  for (int k = 1; k <= 3; ++k) {
    std::vector<Poly> gens;
    for (int i = 0; i < k; ++i) gens.push_back(Poly::variable(Rm, i));
    CHECK(krull_dim(Ideal(Rm, gens, MonomialOrder::grevlex())) == 3 - k);
    CHECK(krull_dim(Ideal(Rm, gens, MonomialOrder::local_ds())) == 3 - k);
  }
}

TEST_CASE("quotient monomial basis") {
  RingPtr R = Ring::poly_ring({"x1", "x2"});
  auto qb = quotient_monomial_basis(
      Ideal(R, {parse_poly("x1^2", R), parse_poly("x2^2", R)},
            MonomialOrder::grevlex()));
  REQUIRE(qb.finite);
  CHECK(qb.monomials.size() == 4);

  RingPtr R3 = Ring::poly_ring({"x2", "x3"});
  Poly f = parse_poly("x2^4+x3^4", R3);
  auto qb2 = quotient_monomial_basis(
      Ideal(R3, {f.derivative(0), f.derivative(1)}, MonomialOrder::local_ds()));
  REQUIRE(qb2.finite);
  CHECK(qb2.monomials.size() == 9);

  RingPtr R1 = Ring::poly_ring({"x1"});
  auto qb3 = quotient_monomial_basis(
      Ideal(R1, {parse_poly("x1", R1)}, MonomialOrder::grevlex()));
  REQUIRE(qb3.finite);
  CHECK(qb3.monomials.size() == 1);

  auto qbInf = quotient_monomial_basis(
      Ideal(R, {parse_poly("x1", R)}, MonomialOrder::grevlex()));
  CHECK_FALSE(qbInf.finite);
}

TEST_CASE("syzygies: examples, exact identities, Koszul span") {
  RingPtr R = Ring::poly_ring({"x1", "x2"});
  Poly x = Poly::variable(R, 0), y = Poly::variable(R, 1);
  auto rows = syzygies({x, y});
  REQUIRE(!rows.empty());
  CHECK(module_member({y, -x}, rows, MonomialOrder::grevlex()));

  // Euler-style row for (2x, 3y^2, -(x^2+y^3))
  std::vector<Poly> f{parse_poly("2*x1", R), parse_poly("3*x2^2", R),
                      parse_poly("-(x1^2+x2^3)", R)};
  auto rows2 = syzygies(f);
  for (auto& r : rows2) {
    Poly acc(R);
    for (size_t i = 0; i < f.size(); ++i) acc += r[i] * f[i];
    CHECK(acc.is_zero());
  }
  CHECK(module_member({x * rat_make(1, 2), y * rat_make(1, 3),
                       parse_poly("1", R)},
                      rows2, MonomialOrder::grevlex()));

  // single nonzero input: only the zero syzygy
  CHECK(syzygies({parse_poly("x1^2+x2", R)}).empty());
}

TEST_CASE("syzygy rows generate all Koszul syzygies on random inputs") {
  RingPtr R = Ring::poly_ring({"x1", "x2"});
  std::mt19937_64 rng(204);
  for (int t = 0; t < 100; ++t) {
    std::vector<Poly> f;
    for (int i = 0; i < 3; ++i) {
      Poly g = random_poly(R, rng, 2, 2);
      f.push_back(g);
    }
    bool anyZero = false;
    for (auto& g : f) anyZero = anyZero || g.is_zero();
    if (anyZero) continue;
    auto rows = syzygies(f);
    for (auto& r : rows) {
      Poly acc(R);
      for (size_t i = 0; i < f.size(); ++i) acc += r[i] * f[i];
      REQUIRE(acc.is_zero());
    }
    for (size_t i = 0; i < f.size(); ++i)
      for (size_t j = i + 1; j < f.size(); ++j) {
        std::vector<Poly> koszul(f.size(), Poly(R));
        koszul[i] = f[j];
        koszul[j] = -f[i];
        CHECK(module_member(koszul, rows, MonomialOrder::grevlex()));
      }
  }
}

TEST_CASE("regular sequences") {
  RingPtr R = Ring::poly_ring({"x1", "x2", "x3"});
  std::vector<Poly> coords{Poly::variable(R, 0), Poly::variable(R, 1),
                           Poly::variable(R, 2)};
  CHECK(is_regular_sequence(coords, MonomialOrder::grevlex()));
  CHECK_FALSE(is_regular_sequence({parse_poly("x1", R), parse_poly("x1*x2", R)},
                                  MonomialOrder::grevlex()));
}

TEST_CASE("resource budget raises instead of lying") {
  RingPtr R = Ring::poly_ring({"x1", "x2", "x3"});
  GroebnerOptions tiny;
  tiny.max_steps = 2;
  Ideal I(R,
          {parse_poly("x1^3+x2^2*x3", R), parse_poly("x2^3+x1*x3^2", R),
           parse_poly("x3^3+x1^2*x2", R)},
          MonomialOrder::grevlex());
  CHECK_THROWS_AS(groebner_basis(I, tiny), ResourceLimitError);
}
