#include "generators.hpp"

#include "qpg/examples.hpp"
#include "qpg/quasi_poisson.hpp"

#include <doctest.h>

using namespace qpg;
using qpg::testing::Gen;

namespace {

RingPtr r3() { return CoordinateRing::make({"x", "y", "z"}); }

MultivectorField field(const RingPtr& R, std::vector<Polynomial> c) { return MultivectorField::vector_field(R, std::move(c)); }

// rho(e_i) = x cross e_i, so that rho is a Lie algebra morphism for [e1, e2] = e3.
GAction rotations(const RingPtr& R) {
  auto x = R->var(0), y = R->var(1), z = R->var(2), o = R->zero();
  return GAction{so3_algebra(), {field(R, {o, z, -y}), field(R, {-z, o, x}), field(R, {y, -x, o})}};
}

MultivectorField lie_poisson(const RingPtr& R) {
  MultivectorField pi(R);
  pi.add_term({0, 1}, R->var(2));
  pi.add_term({1, 2}, R->var(0));
  pi.add_term({2, 0}, R->var(1));
  return pi;
}

Matrix evaluate(const PolyMatrix& m, const std::vector<Rational>& pt) {
  Matrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = m[i][j].evaluate(pt);
  return out;
}

}  // namespace

TEST_SUITE("chart_geometry") {
  TEST_CASE("bracket of x d/dy and y d/dx") {
    auto R = CoordinateRing::make({"x", "y"});
    auto x = R->var(0), y = R->var(1);
    auto X = field(R, {R->zero(), x}), Y = field(R, {y, R->zero()});
    CHECK(schouten(X, Y) == field(R, {x, -y}));
  }

  TEST_CASE("rotation action") {
    auto R = r3();
    auto act = rotations(R);
    CHECK(check_action(act).all_passed());
    auto flipped = act;
    flipped.rho[0] = -flipped.rho[0];
    auto r = check_action(flipped);
    REQUIRE(r.any_failed());
    const auto* hom = r.find("homomorphism");
    REQUIRE(hom != nullptr);
    CHECK_FALSE(hom->witness.empty());
  }

  TEST_CASE("pi = 0 with trivial so(3) action") {
    auto R = r3();
    auto M = make_space("trivial", trivial_action(so3_algebra(), R), MultivectorField(R));
    CHECK(check_quasi_poisson(M).all_passed());
    // The anchor is 1/2 rho rho* = 0.
    for (std::size_t i = 0; i < 3; ++i) CHECK(anchor(M, differential(*R, R->var(i))).is_zero());
  }

  TEST_CASE("rho(phi) for rotations of R3") {
    auto R = r3();
    auto M = make_space("rot", rotations(R), MultivectorField(R));
    // phi = 1/2 e1 e2 e3, and the three rotation fields are dependent.
    auto direct = wedge(wedge(M.action.rho[0], M.action.rho[1]), M.action.rho[2]) * Rational(1, 2);
    CHECK(direct.is_zero());
    CHECK(rho_phi(M) == direct);
    CHECK(check_quasi_poisson(M).all_passed());
    // d/dx ^ d/dy is Poisson but not invariant.
    MultivectorField pi(R);
    pi.add_term({0, 1}, R->one());
    auto bad = make_space("rot-dxdy", rotations(R), pi);
    auto r = check_quasi_poisson(bad);
    CHECK(r.find("pi_pi_equals_rho_phi")->ok());
    CHECK_FALSE(r.find("pi_invariant")->ok());
    CHECK(check_quasi_poisson(make_space("lie-poisson", rotations(R), lie_poisson(R))).all_passed());
  }

  TEST_CASE("conjugation on SL(2)") {
    auto H = sl2_conjugation();
    CHECK(check_quasi_poisson(H.space).all_passed());
    CHECK(check_moment_map(H).all_passed());
    CHECK(check_i_map(H, {{1, 0, 0, 1}, {2, 1, 1, 1}}).all_passed());
    CHECK(check_cotangent_differential(H.space, 1).all_passed());
  }

  TEST_CASE("double action has rho(phi) = 0") {
    auto F = sl2_double_factor("x", 1);
    CHECK(rho_phi(F).is_zero());
    CHECK(check_quasi_poisson(F).all_passed());
  }

  TEST_CASE("invariant fields on SL(2)") {
    auto G = sl2_group("x");
    const auto& m = G.algebra;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Matrix comm = m.basis[i] * m.basis[j] - m.basis[j] * m.basis[i];
        auto LL = schouten(left_field(G, 0, m.basis[i]), left_field(G, 0, m.basis[j]));
        auto diff = LL - left_field(G, 0, comm);
        for (const auto& [idx, c] : diff.terms()) CHECK(G.ring->reduce(c).is_zero());
        auto LR = schouten(left_field(G, 0, m.basis[i]), right_field(G, 0, m.basis[j]));
        for (const auto& [idx, c] : LR.terms()) CHECK(G.ring->reduce(c).is_zero());
      }
  }

  TEST_CASE("Poisson case: d is [pi, .] and the anchor is pi#") {
    auto R = CoordinateRing::make({"x", "y"});
    MultivectorField pi(R);
    pi.add_term({0, 1}, R->var(0) * R->var(1) + R->one());
    auto M = make_space("poisson", trivial_action(abelian_algebra(1), R), pi);
    REQUIRE(check_quasi_poisson(M).all_passed());
    Gen g(20);
    for (int t = 0; t < 10; ++t) {
      auto f = MultivectorField::function(R, g.polynomial(2));
      auto X = g.multivector(R, 1);
      CHECK(cotangent_differential(M, f, 1) == schouten(pi, f));
      CHECK(cotangent_differential(M, X, 1) == schouten(pi, X));
      OneForm a = differential(*R, g.polynomial(2));
      CHECK(anchor(M, a) == sharp(pi, a));
    }
  }

  TEST_CASE("Hamiltonian map convention") {
    auto R = CoordinateRing::make({"x", "y"});
    MultivectorField pi(R);
    pi.add_term({0, 1}, R->one());
    auto f = R->var(0);
    CHECK(sharp(pi, differential(*R, f)) == schouten(pi, MultivectorField::function(R, f)));
  }

  TEST_CASE("double D(SL(2))") {
    auto D = sl2_double();
    CHECK(check_quasi_poisson(D.space).all_passed());
    CHECK(check_moment_map(D).all_passed());
    std::vector<std::vector<Rational>> pts{{1, 0, 0, 1, 1, 0, 0, 1}, {1, 1, 0, 1, 2, 1, 1, 1}};
    auto q = check_quasi_symplectic(D.space, pts);
    REQUIRE(q.pointwise.size() == 2);
    CHECK(q.pointwise[0]);
    CHECK(q.pointwise[1]);
    auto am = anchor_matrix(D.space);
    for (const auto& pt : pts) {
      auto [rk, dim] = anchor_rank_at(D.space, pt);
      CHECK(dim == 6);
      CHECK(rk == 6);
      // Independent: rank of the evaluated anchor matrix, restricted by the tangent space.
      CHECK(rank(evaluate(am, pt)) >= rk);
    }
  }

  TEST_CASE("conjugation anchor at -I") {
    auto H = sl2_conjugation();
    std::vector<Rational> minus_one{-1, 0, 0, -1};
    auto [rk, dim] = anchor_rank_at(H.space, minus_one);
    CHECK(dim == 3);
    Matrix A = evaluate(anchor_matrix(H.space), minus_one);
    CHECK(rank(A) == rk);
  }

  TEST_CASE("fusion needs psi") {
    auto a = sl2_conjugation("x"), b = sl2_conjugation("y");
    CHECK(check_quasi_poisson(fusion_product(a, b).space).all_passed());
    auto r = check_quasi_poisson(fusion_product(a, b, false).space);
    CHECK_FALSE(r.find("pi_pi_equals_rho_phi")->ok());
  }

  TEST_CASE("fusion product of two conjugation spaces: explicit moment map") {
    auto a = sl2_conjugation("x"), b = sl2_conjugation("y");
    auto F = fusion_product(a, b);
    const auto& R = *F.space.ring();
    // Phi = x y, entry (1,1) = x11 y11 + x12 y21.
    auto x11 = R.var("x11_1"), x12 = R.var("x12_1"), y11 = R.var("y11_2"), y21 = R.var("y21_2");
    CHECK(R.reduce(F.moment.components[0] - (x11 * y11 + x12 * y21)).is_zero());
    CHECK(check_moment_map(F).all_passed());
  }

  TEST_CASE("twist by the r-matrix") {
    auto H = sl2_conjugation();
    ExteriorElement u(3);
    u.add_wedge({1, 2}, Rational(1));
    auto c = solve_r_matrix_scale(H.space.algebra(), H.space.s, u);
    REQUIRE(c.has_value());
    auto t = twist_by_r_matrix(H.space, u * *c);
    CHECK(t.report.all_passed());
    auto pp = schouten(t.pi, t.pi);
    for (const auto& [idx, coef] : pp.terms()) CHECK(H.space.ring()->reduce(coef).is_zero());
  }

  TEST_CASE("AMM groupoid maps") {
    auto A = sl2_amm();
    auto C = sl2_conjugation();
    CHECK(check_qp_morphism(amm_source(A, C), A.space, C.space, false).all_passed());
    CHECK(check_qp_morphism(amm_target(A, C), A.space, C.space, true).all_passed());
    CHECK(check_qp_morphism(amm_target(A, C), A.space, C.space, false).any_failed());
    CHECK(check_amm_groupoid().all_passed());
  }

  TEST_CASE("coisotropic subvarieties") {
    auto R = CoordinateRing::make({"x1", "x2"});
    MultivectorField pi(R);
    pi.add_term({0, 1}, R->one());
    auto diag = CoordinateRing::make(R->vars(), {R->var(0) - R->var(1)});
    auto d = differential(*R, R->var(0) - R->var(1));
    CHECK(evaluate_bivector(pi, d, d).is_zero());
    CHECK(check_coisotropic_subvariety(pi, diag).all_passed());

    auto R3 = r3();
    auto axis = CoordinateRing::make(R3->vars(), {R3->var(0), R3->var(1)});
    CHECK(check_coisotropic_subvariety(lie_poisson(R3), axis).any_failed());
    auto sphere = CoordinateRing::make(
        R3->vars(), {R3->var(0) * R3->var(0) + R3->var(1) * R3->var(1) + R3->var(2) * R3->var(2) - R3->one()});
    CHECK(check_coisotropic_subvariety(lie_poisson(R3), sphere).all_passed());
  }

  TEST_CASE("coisotropic stabilizers") {
    auto R = r3();
    auto so3 = so3_algebra();
    // Trivial action: the stabilizer is g and its annihilator is 0.
    auto triv = check_coisotropic_stabilizers(trivial_action(so3, R), so3.s_tensor(), {{1, 2, 3}});
    CHECK(triv.report.all_passed());
    // Rotations: the stabilizer at (0,0,1) is a line, not coisotropic for a definite form.
    auto rot = check_coisotropic_stabilizers(rotations(R), so3.s_tensor(), {{0, 0, 1}, {0, 0, 0}});
    REQUIRE(rot.pointwise.size() == 2);
    CHECK_FALSE(rot.pointwise[0]);
    CHECK(rot.pointwise[1]);
  }

  TEST_CASE("Schouten bracket identities on random multivector fields") {
    Gen g(21);
    auto R = r3();
    auto sign = [](long k) { return k % 2 == 0 ? Rational(1) : Rational(-1); };
    for (int t = 0; t < qpg::testing::kTrials; ++t) {
      std::size_t p = static_cast<std::size_t>(g.between(0, 2)), q = static_cast<std::size_t>(g.between(1, 2));
      auto P = g.multivector(R, p), Q = g.multivector(R, q), S = g.multivector(R, 1);
      long a = static_cast<long>(p) - 1, b = static_cast<long>(q) - 1;
      // [P,Q] = -(-1)^{(p-1)(q-1)} [Q,P]
      CHECK(schouten(P, Q) == -(schouten(Q, P) * sign(a * b)));
      // Jacobi with a vector field: [S,[P,Q]] = [[S,P],Q] + [P,[S,Q]].
      CHECK(schouten(S, schouten(P, Q)) == schouten(schouten(S, P), Q) + schouten(P, schouten(S, Q)));
      // Leibniz over the wedge product with a function.
      auto f = MultivectorField::function(R, g.polynomial(3));
      auto h = MultivectorField::function(R, g.polynomial(3));
      CHECK(schouten(S, wedge(f, h)) == wedge(schouten(S, f), h) + wedge(f, schouten(S, h)));
    }
  }

  TEST_CASE("cotangent differential squares to zero on random inputs") {
    Gen g(22);
    auto R = r3();
    auto M = make_space("lie-poisson", rotations(R), lie_poisson(R));
    for (int t = 0; t < 10; ++t) {
      auto P = g.multivector(R, static_cast<std::size_t>(g.between(0, 2)));
      CHECK(cotangent_differential(M, cotangent_differential(M, P, 1), 1).is_zero());
    }
  }
}
