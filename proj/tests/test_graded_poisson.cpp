#include "generators.hpp"

#include "qpg/examples.hpp"
#include "qpg/graded_poisson.hpp"

#include <doctest.h>

using namespace qpg;
using qpg::testing::Gen;

namespace {

// A fresh algebra with the generators and table of P, then one entry replaced.
GradedAlgebraPtr copy_with(const GradedAlgebra& P, std::size_t a, std::size_t b, const GradedElement& value) {
  auto A = GradedAlgebra::make(P.generators(), P.ring().ideal_generators(), P.ring().order());
  auto transfer = [&](const GradedElement& x) {
    GradedElement y(A.get());
    for (const auto& [w, c] : x.terms()) y.add_term(w, c);
    return y;
  };
  for (std::size_t i = 0; i < P.ngens(); ++i)
    for (std::size_t j = 0; j < P.ngens(); ++j) A->set_bracket(i, j, transfer(P.table(i, j)));
  A->set_bracket(a, b, transfer(value));
  return A;
}

}  // namespace

TEST_SUITE("graded_poisson") {
  TEST_CASE("G_small(so(3))") {
    auto g = so3_algebra();
    auto P = build_Gsmall(g, g.s_tensor());
    CHECK(check_graded_poisson(*P.algebra).all_passed());
    const auto& A = *P.algebra;
    auto t = A.gen(P.t);
    for (std::size_t i = 0; i < 3; ++i) CHECK(bracket(t, A.gen(P.xi[i])).is_zero());
    // {t, t} = phi with xi_i for e_i; phi(e^1, e^2, e^3) = 1/2 e^1([e2, e3]) = 1/2.
    auto tt = bracket(t, t);
    Rational oracle = g.bracket(unit(3, 1), unit(3, 2))[0] / 2;
    CHECK(tt.coefficient({static_cast<std::uint32_t>(P.xi[0]), static_cast<std::uint32_t>(P.xi[1]),
                          static_cast<std::uint32_t>(P.xi[2])}) == Polynomial::constant(0, oracle));
    CHECK(tt.terms().size() == 1);
  }

  TEST_CASE("a wrong {t, xi} breaks Jacobi") {
    auto g = so3_algebra();
    auto P = build_Gsmall(g, g.s_tensor());
    auto bad = copy_with(*P.algebra, P.t, P.xi[0], P.algebra->gen(P.xi[0]));
    auto r = check_graded_poisson(*bad);
    REQUIRE(r.find("jacobi") != nullptr);
    CHECK_FALSE(r.find("jacobi")->ok());
    // The unchanged copy passes.
    auto same = copy_with(*P.algebra, P.t, P.xi[0], P.algebra->zero());
    CHECK(check_graded_poisson(*same).all_passed());
  }

  TEST_CASE("G_big(SL(2)) brackets") {
    auto G = sl2_group("x");
    auto P = build_Gbig(G);
    const auto& A = *P.algebra;
    CHECK(bracket(A.gen("x11"), A.gen("x12")).is_zero());
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& e = G.algebra.basis[i];
      auto rho = left_field(G, 0, e) - right_field(G, 0, e);
      for (std::size_t v = 0; v < 4; ++v) {
        auto expected = A.scalar(G.ring->reduce(apply_field(rho, G.ring->var(v))));
        CHECK(bracket(A.gen(P.xi[i]), A.gen(v)) == expected);
      }
    }
    CHECK(check_graded_poisson(*P.algebra).all_passed());
  }

  TEST_CASE("structure map of the conjugation space") {
    auto H = sl2_conjugation();
    auto P = build_Gbig(H.group);
    auto T = cotangent_presentation(H.space.ring());
    CHECK(check_poisson_map(structure_map(H, P, T)).all_passed());
    auto twice = H;
    twice.space.pi = H.space.pi * Rational(2);
    auto r = check_poisson_map(structure_map(twice, P, T));
    CHECK(r.any_failed());
    // rho(phi) vanishes on conjugation, so {t, t} still matches and the moment bracket {x, t} breaks.
    const auto* b = r.find("brackets");
    REQUIRE(b != nullptr);
    CHECK(b->status == Status::fail);
    CHECK(b->witness.find(", t}") != std::string::npos);
    CHECK(b->witness.find("{t, t}") == std::string::npos);
  }

  TEST_CASE("mult^* on generators") {
    auto g = abelian_algebra(2);
    auto P = build_Gsmall(g, g.s_tensor());
    auto m = multiplication_pullback(P);
    const auto& A = *P.algebra;
    const auto& PP = *m.product;
    // Tensor factors are the generators with suffixes; the first factor comes first.
    const std::size_t n = A.ngens();
    for (std::size_t i = 0; i < 2; ++i) {
      auto img = m.map.pullback(A.gen(P.xi[i]));
      CHECK(img == PP.gen(P.xi[i]) + PP.gen(n + P.xi[i]));
    }
    auto t_img = m.map.pullback(A.gen(P.t));
    GradedElement expected = PP.gen(P.t) + PP.gen(n + P.t);
    for (std::size_t i = 0; i < 2; ++i) expected += PP.gen(P.xi[i]) * PP.gen(n + P.xi[i]) * Rational(1, 2);
    CHECK(t_img == expected);
    CHECK(check_multiplication(P).all_passed());
    auto so3 = so3_algebra();
    CHECK(check_multiplication(build_Gsmall(so3, so3.s_tensor())).all_passed());
  }

  TEST_CASE("fusion cross-check with and without the cocycle") {
    auto a = sl2_conjugation("x"), b = sl2_conjugation("y");
    auto with = fusion_crosscheck(a, b);
    CHECK(with.report.all_passed());
    CHECK(with.residue.is_zero());
    auto without = fusion_crosscheck(a, b, false);
    const auto& R = *without.residue.ring();
    auto diff = without.residue - without.rho_psi;
    for (const auto& [idx, c] : diff.terms()) CHECK(R.reduce(c).is_zero());
    CHECK_FALSE(without.rho_psi.is_zero());
  }

  TEST_CASE("Schouten bracket agrees with the bracket on T*[1]M") {
    Gen g(30);
    auto R = CoordinateRing::make({"x", "y", "z"});
    auto T = cotangent_presentation(R);
    for (int t = 0; t < qpg::testing::kTrials; ++t) {
      auto P = g.multivector(R, static_cast<std::size_t>(g.between(0, 2)));
      auto Q = g.multivector(R, static_cast<std::size_t>(g.between(0, 2)));
      CHECK(to_graded(schouten(P, Q), *T) == bracket(to_graded(P, *T), to_graded(Q, *T)));
      CHECK(from_graded(to_graded(P, *T), R) == P);
    }
  }

  TEST_CASE("graded Jacobi on random elements of G_small(sl(2))") {
    Gen g(31);
    auto sl2 = sl2_algebra();
    auto P = build_Gsmall(sl2, sl2.s_tensor());
    const auto& A = *P.algebra;
    auto random_element = [&](int& deg) {
      // Either t or a product of xi's, times a rational.
      if (g.between(0, 3) == 0) {
        deg = 2;
        return A.gen(P.t) * g.rational();
      }
      std::size_t k = static_cast<std::size_t>(g.between(1, 2));
      GradedElement x = A.one();
      for (std::size_t i = 0; i < k; ++i) x = x * A.gen(P.xi[static_cast<std::size_t>(g.between(0, 2))]);
      deg = static_cast<int>(k);
      return x * g.rational();
    };
    auto sign = [](int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); };
    for (int t = 0; t < qpg::testing::kTrials; ++t) {
      int da, db, dc;
      auto a = random_element(da), b = random_element(db), c = random_element(dc);
      // {a,{b,c}} = {{a,b},c} + (-1)^{(|a|-1)(|b|-1)} {b,{a,c}}
      CHECK(bracket(a, bracket(b, c)) ==
            bracket(bracket(a, b), c) + bracket(b, bracket(a, c)) * sign((da - 1) * (db - 1)));
      // {a, b c} = {a, b} c + (-1)^{(|a|-1)|b|} b {a, c}
      CHECK(bracket(a, b * c) == bracket(a, b) * c + b * bracket(a, c) * sign((da - 1) * db));
      (void)dc;
    }
  }
}
