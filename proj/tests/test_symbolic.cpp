#include "generators.hpp"

#include "qpg/graded.hpp"
#include "qpg/lie.hpp"
#include "qpg/parser.hpp"
#include "qpg/ring.hpp"

#include <doctest.h>

using namespace qpg;
using qpg::testing::Gen;

namespace {

RingPtr sl2_ring() {
  auto plain = CoordinateRing::make({"a", "b", "c", "d"});
  return CoordinateRing::make({"a", "b", "c", "d"}, {parse_polynomial("a*d - b*c - 1", *plain)});
}

// Points of SL(2) with rational entries: [[a, b], [c, (1 + b c)/a]].
std::vector<Rational> sl2_point(Gen& g) {
  Rational a = g.rational();
  while (a == 0) a = g.rational();
  Rational b = g.rational(), c = g.rational();
  return {a, b, c, (1 + b * c) / a};
}

}  // namespace

TEST_SUITE("symbolic") {
  TEST_CASE("determinant reduces to one on SL(2)") {
    auto R = sl2_ring();
    CHECK(parse_polynomial("a*d - b*c", *R) == R->one());
    // The Groebner basis of a principal ideal is its generator, up to scale.
    REQUIRE(R->groebner_basis().size() == 1);
    CHECK(R->groebner_basis()[0].total_degree() == 2);
  }

  TEST_CASE("expansion cancels to y^2") {
    auto R = CoordinateRing::make({"x", "y"});
    Polynomial p = parse_polynomial("(x+y)^2 - x^2 - 2*x*y", *R);
    CHECK(p == Polynomial::monomial(2, {0, 2}, Rational(1)));
    // Independent route: evaluate the unexpanded expression directly.
    Gen g(11);
    for (int t = 0; t < 10; ++t) {
      auto pt = g.point(2);
      Rational direct = (pt[0] + pt[1]) * (pt[0] + pt[1]) - pt[0] * pt[0] - 2 * pt[0] * pt[1];
      CHECK(p.evaluate(pt) == direct);
    }
  }

  TEST_CASE("a is not in the ideal of SL(2)") {
    auto R = sl2_ring();
    CHECK_FALSE(R->ideal_member(R->var("a")));
    // Every member vanishes on the variety; a is 1 at the identity.
    std::vector<Rational> identity{1, 0, 0, 1};
    REQUIRE(R->contains_point(identity));
    CHECK(R->var("a").evaluate(identity) == 1);
    CHECK(R->ideal_member(parse_polynomial_raw("a*(a*d - b*c - 1)", *R)));
  }

  TEST_CASE("parse errors carry positions") {
    auto R = CoordinateRing::make({"x", "y"});
    try {
      parse_polynomial("x*(y + ", *R);
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 7);
    }
    CHECK_THROWS_AS(parse_polynomial("x + w", *R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x^-2", *R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x y", *R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0", *R), ParseError);
    CHECK_THROWS_AS(parse_polynomial("", *R), ParseError);
    CHECK(parse_polynomial("-3/6*x", *R) == Polynomial::monomial(2, {1, 0}, Rational(-1, 2)));
  }

  TEST_CASE("ring laws on random polynomials") {
    Gen g(1);
    for (int t = 0; t < qpg::testing::kTrials; ++t) {
      auto p = g.polynomial(3), q = g.polynomial(3), r = g.polynomial(3);
      CHECK(p * q == q * p);
      CHECK(p * (q + r) == p * q + p * r);
      CHECK((p * q) * r == p * (q * r));
      CHECK(p - p == Polynomial(3));
      auto pt = g.point(3);
      CHECK((p * q + r).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt) + r.evaluate(pt));
    }
  }

  TEST_CASE("derivative obeys Leibniz") {
    Gen g(2);
    for (int t = 0; t < qpg::testing::kTrials; ++t) {
      auto p = g.polynomial(3), q = g.polynomial(3);
      for (std::size_t i = 0; i < 3; ++i) CHECK((p * q).derivative(i) == p.derivative(i) * q + p * q.derivative(i));
    }
  }

  TEST_CASE("printing round-trips through the parser") {
    Gen g(3);
    auto R = CoordinateRing::make({"x", "y", "z"});
    for (int t = 0; t < qpg::testing::kTrials; ++t) {
      auto p = g.polynomial(3, 5, 3);
      CHECK(parse_polynomial(R->print(p), *R) == p);
    }
  }

  TEST_CASE("reduction is a normal form modulo det - 1") {
    Gen g(4);
    auto R = sl2_ring();
    for (int t = 0; t < qpg::testing::kTrials; ++t) {
      auto p = g.polynomial(4, 4, 3);
      auto r = R->reduce(p);
      CHECK(R->reduce(r) == r);
      CHECK(R->ideal_member(p - r));
      auto pt = sl2_point(g);
      REQUIRE(R->contains_point(pt));
      CHECK(p.evaluate(pt) == r.evaluate(pt));
    }
  }

  TEST_CASE("Groebner basis of a non-principal ideal") {
    auto plain = CoordinateRing::make({"x", "y", "z"});
    auto R = CoordinateRing::make({"x", "y", "z"},
                                  {parse_polynomial("x^2 - y*z", *plain), parse_polynomial("y^2 - x*z", *plain),
                                   parse_polynomial("z^2 - x*y", *plain)});
    CHECK(R->groebner_basis().size() >= 3);
    CHECK(R->ideal_member(parse_polynomial_raw("x^3 - y^3", *plain)));
    CHECK_FALSE(R->ideal_member(plain->var("x")));
  }

  TEST_CASE("wedge is graded commutative") {
    Gen g(5);
    for (int t = 0; t < qpg::testing::kTrials; ++t) {
      auto a = g.exterior(4, 1), b = g.exterior(4, 1), c = g.exterior(4, 2);
      CHECK(wedge(a, b) == wedge(b, a) * Rational(-1));
      CHECK(wedge(a, a).is_zero());
      CHECK(wedge(c, a) == wedge(a, c));
      CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
  }

  TEST_CASE("Koszul signs in a graded algebra") {
    auto A = GradedAlgebra::make({{"x", 0}, {"p", 1}, {"q", 1}, {"t", 2}});
    auto p = A->gen("p"), q = A->gen("q"), t = A->gen("t"), x = A->gen("x");
    CHECK(p * q == -(q * p));
    CHECK((p * p).is_zero());
    CHECK(t * p == p * t);
    CHECK(x * p == p * x);
    CHECK((p * q).degrees() == std::vector<int>{2});
  }

  TEST_CASE("bracket extends the table as a biderivation") {
    // T*[1]R: {p, x} = 1, so {p, x^2} = 2x and {p q, x} = q up to sign.
    auto A = GradedAlgebra::make({{"x", 0}, {"p", 1}, {"q", 1}});
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) A->set_bracket(a, b, A->zero());
    A->set_bracket(1, 0, A->one());
    auto x = A->gen("x"), p = A->gen("p"), q = A->gen("q");
    CHECK(bracket(p, x * x) == x * Rational(2));
    CHECK(bracket(x, p) == -A->one());
    // {pq, x} = p{q, x} + (-1)^{|q|(|x|-1)}{p, x} q = -q, and {x, pq} = {x, p} q = -q.
    CHECK(bracket(p * q, x) == -q);
    CHECK(bracket(x, p * q) == -q);
  }
}
