#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcond/conditions.hpp"
#include "family.hpp"

using namespace dcond;

TEST_CASE("generic arrangement certification") {
  RingPtr R3 = Ring::poly_ring({"x1", "x2", "x3"});
  SUBCASE("generic triples of 2-3-4 type") {
    std::vector<Poly> hs = {parse_poly("x1^2+x2^3+x3^4", R3),
                            parse_poly("x1^2+2*x2^3+3*x3^4", R3),
                            parse_poly("2*x1^2+x2^3+5*x3^4", R3)};
    CHECK(verify_generic_arrangement(hs).holds());
    CHECK(verify_generic_arrangement({hs[0], hs[1]}).holds());
  }
  SUBCASE("coprimality failure") {
    CHECK(verify_generic_arrangement(
              {parse_poly("x1", R3), parse_poly("x1*x2", R3)})
              .fails());
  }
  SUBCASE("non-isolated factor") {
    CHECK(verify_generic_arrangement(
              {parse_poly("x1-x2*x3", R3),
               parse_poly("x1*x2^2+x1^2*x2", R3)})
              .fails());
  }
  SUBCASE("degenerate subfamily") {
    // proportional (x1^2, x2^3) parts: the pair minors vanish on the whole
    // intersection curve, so the subfamily is not an isolated complete
    // intersection
    CHECK(verify_generic_arrangement(
              {parse_poly("x1^2+x2^3+x3^4", R3),
               parse_poly("x1^2+x2^3+2*x3^4", R3)})
              .fails());
  }
}

TEST_CASE("pair decision by weight arithmetic") {
  RingPtr R3 = Ring::poly_ring({"x1", "x2", "x3"});
  Poly h1 = parse_poly("x1^2+x2^3+x3^4", R3);
  Poly h2 = parse_poly("x1^2+2*x2^3+3*x3^4", R3);
  auto w = detect_weights(h1 * h2);
  REQUIRE(w.has_value());
  Verdict v = corpdeux_decision(h1, h2, *w);
  CHECK(v.fails());  // witness class of weight 11/24: (11/24+13/24)/(1/2) = 2

  // quadric pairs fail too: the class of x1 has weight 1/4 = (1/2)*2 - 3/4
  RingPtr Rq = Ring::poly_ring({"x1", "x2", "x3"});
  Poly q1 = parse_poly("x1^2+x2^2+x3^2", Rq);
  Poly q2 = parse_poly("x1^2+2*x2^2+3*x3^2", Rq);
  auto wq = detect_weights(q1 * q2);
  REQUIRE(wq.has_value());
  CHECK(corpdeux_decision(q1, q2, *wq).fails());

  // normal crossing pair: the minor ideal is the unit ideal, the quotient is
  // empty and the bad weight set is never met
  Poly p1 = Poly::variable(Rq, 0), p2 = Poly::variable(Rq, 1);
  auto wp = detect_weights(p1 * p2);
  REQUIRE(wp.has_value());
  CHECK(corpdeux_decision(p1, p2, *wp).holds());
  CHECK(decide_A_inv({p1, p2}).holds());
}

TEST_CASE("A(1/h) decision routes") {
  RingPtr R2 = Ring::poly_ring({"x1", "x2"});
  RingPtr R3 = Ring::poly_ring({"x1", "x2", "x3"});
  Poly l = parse_poly("x1-x2*x3", R3);

  SUBCASE("isolated route") {
    CHECK(decide_A_inv({parse_poly("x1^2+x2^3", R2)}).holds());
    CHECK(decide_A_inv({parse_poly("x1^2+x2^4+x3^4", R3)}).fails());
    // weighted homogeneous in no coordinates we can see: unknown
    Verdict v = decide_A_inv({parse_poly("x1^5+x2^5+x1^3*x2^3", R2)});
    CHECK(v.unknown());
  }
  SUBCASE("pencil family route") {
    CHECK(decide_A_inv({l, parse_poly("x1^3+x2^4", R3)}).fails());
    CHECK(decide_A_inv({l, parse_poly("x1^3+x2^3", R3)}).holds());
    CHECK(decide_A_inv({l, parse_poly("x1*x2^2+x1^2*x2", R3)}).holds());
    // homogeneous of degree >= 4: undecided by the dichotomy
    CHECK(decide_A_inv({l, parse_poly("x1^4+x2^4", R3)}).unknown());
  }
  SUBCASE("generic arrangement route") {
    Poly h1 = parse_poly("x1^2+x2^3+x3^4", R3);
    Poly h2 = parse_poly("x1^2+2*x2^3+3*x3^4", R3);
    CHECK(decide_A_inv({h1, h2}).fails());
  }
}

TEST_CASE("implication closure examples") {
  SUBCASE("W holds pushes down the lattice") {
    ConditionLattice lat;
    lat.seed(Cond::W, Verdict::make_holds("seed", ""));
    lat = propagate_implications(lat);
    for (Cond c : {Cond::G, Cond::A_h, Cond::L, Cond::M})
      CHECK(lat.state(c) == VerdictState::Holds);
    CHECK(lat.state(Cond::A_inv) == VerdictState::Unknown);
  }
  SUBCASE("M fails pulls everything above down") {
    ConditionLattice lat;
    lat.seed(Cond::M, Verdict::make_fails("seed", ""));
    lat = propagate_implications(lat);
    for (Cond c : {Cond::L, Cond::A_h, Cond::G, Cond::W, Cond::A_inv})
      CHECK(lat.state(c) == VerdictState::Fails);
  }
  SUBCASE("the conjunction rule") {
    ConditionLattice lat;
    lat.seed(Cond::H, Verdict::make_holds("seed", ""));
    lat.seed(Cond::B, Verdict::make_holds("seed", ""));
    lat.seed(Cond::A_h, Verdict::make_holds("seed", ""));
    lat = propagate_implications(lat);
    CHECK(lat.state(Cond::A_inv) == VerdictState::Holds);
    CHECK(lat.state(Cond::A_log) == VerdictState::Holds);
  }
  SUBCASE("A_log fails forces A_inv fails") {
    ConditionLattice lat;
    lat.seed(Cond::A_log, Verdict::make_fails("seed", ""));
    lat = propagate_implications(lat);
    CHECK(lat.state(Cond::A_inv) == VerdictState::Fails);
  }
}

TEST_CASE("closure is monotone and idempotent") {
  std::mt19937_64 rng(701);
  const Cond all[] = {Cond::H, Cond::B,     Cond::A_h, Cond::A_inv, Cond::W,
                      Cond::G, Cond::A_log, Cond::L,   Cond::M};
  int done = 0;
  while (done < 100) {
    ConditionLattice lat;
    for (Cond c : all) {
      switch (rng() % 4) {
        case 0: lat.seed(c, Verdict::make_holds("seed", "")); break;
        case 1: lat.seed(c, Verdict::make_fails("seed", "")); break;
        default: break;
      }
    }
    ConditionLattice once;
    try {
      once = propagate_implications(lat);
    } catch (const LatticeContradiction&) {
      continue;  // random seeding may be inconsistent; skip those
    }
    ++done;
    ConditionLattice twice = propagate_implications(once);
    for (Cond c : all) {
      CHECK(once.state(c) == twice.state(c));
      // monotone: seeded verdicts survive
      if (lat.state(c) != VerdictState::Unknown)
        CHECK(once.state(c) == lat.state(c));
    }
  }
}

TEST_CASE("the recorded counterexample corpus propagates without contradiction") {
  SUBCASE("pencil with the triple line: L fails, A fails, A(1/h) holds") {
    ConditionLattice lat;
    lat.seed(Cond::L, Verdict::make_fails("paper", ""));
    lat.seed(Cond::A_h, Verdict::make_fails("paper", ""));
    lat.seed(Cond::A_inv, Verdict::make_holds("paper", ""));
    ConditionLattice closed = propagate_implications(lat);
    CHECK(closed.state(Cond::M) == VerdictState::Holds);
    CHECK(closed.state(Cond::B) == VerdictState::Holds);
    CHECK(closed.state(Cond::W) == VerdictState::Fails);
    CHECK(closed.state(Cond::G) == VerdictState::Fails);
  }
  SUBCASE("Koszul-free pencil: L holds, A fails, A(1/h) fails") {
    ConditionLattice lat;
    lat.seed(Cond::L, Verdict::make_holds("paper", ""));
    lat.seed(Cond::A_h, Verdict::make_fails("paper", ""));
    lat.seed(Cond::A_inv, Verdict::make_fails("paper", ""));
    ConditionLattice closed = propagate_implications(lat);
    CHECK(closed.state(Cond::M) == VerdictState::Holds);
    CHECK(closed.state(Cond::G) == VerdictState::Fails);
    CHECK(closed.state(Cond::W) == VerdictState::Fails);
  }
  SUBCASE("the non-Spencer pencil: M fails") {
    ConditionLattice lat;
    lat.seed(Cond::M, Verdict::make_fails("paper", ""));
    ConditionLattice closed = propagate_implications(lat);
    CHECK(closed.state(Cond::A_inv) == VerdictState::Fails);
    CHECK(closed.state(Cond::L) == VerdictState::Fails);
  }
  SUBCASE("an actual contradiction is a hard error") {
    ConditionLattice lat;
    lat.seed(Cond::W, Verdict::make_holds("seed", ""));
    lat.seed(Cond::M, Verdict::make_fails("seed", ""));
    CHECK_THROWS_AS(propagate_implications(lat), LatticeContradiction);
  }
}

TEST_CASE("route (b) with p = 2 agrees with a decide_B route when both decide") {
  // For the generic pair the corpdeux decision is definite while decide_B
  // stays unknown on the product, so the agreement requirement is vacuous;
  // assert exactly that shape so a future decide_B extension revisits it.
  RingPtr R3 = Ring::poly_ring({"x1", "x2", "x3"});
  Poly h1 = parse_poly("x1^2+x2^3+x3^4", R3);
  Poly h2 = parse_poly("x1^2+2*x2^3+3*x3^4", R3);
  BVerdict b = decide_B({h1, h2});
  CHECK(b.verdict.unknown());
  CHECK(decide_A_inv({h1, h2}).fails());
}
