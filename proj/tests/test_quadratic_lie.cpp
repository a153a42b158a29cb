#include "generators.hpp"

#include "qpg/examples.hpp"
#include "qpg/graded_lie.hpp"
#include "qpg/lie.hpp"

#include <doctest.h>

using namespace qpg;
using qpg::testing::Gen;

namespace {

// Jacobi over all basis triples, straight from the structure constants.
bool brute_force_jacobi(const LieAlgebraData& L) {
  const std::size_t n = L.dim();
  auto br = [&](const Vector& x, std::size_t j) {
    Vector out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * L.c[i][j][k];
    return out;
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Vector s = br(br(unit(n, a), b), c);
        s = add(s, br(br(unit(n, b), c), a));
        s = add(s, br(br(unit(n, c), a), b));
        if (!is_zero(s)) return false;
      }
  return true;
}

// <[x,y],z> + <y,[x,z]> = 0 over basis triples.
bool brute_force_invariant(const LieAlgebraData& L, const Matrix& form) {
  const std::size_t n = L.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Rational v = bilinear(L.c[x][y], form, unit(n, z)) + bilinear(unit(n, y), form, L.c[x][z]);
        if (v != 0) return false;
      }
  return true;
}

// phi(e^a, e^b, e^c) = 1/2 e^a([s# e^b, s# e^c]).
Rational phi_oracle(const LieAlgebraData& L, const Matrix& s, std::size_t a, std::size_t b, std::size_t c) {
  return L.bracket(s.row(b), s.row(c))[a] / 2;
}

// The Lie bracket on the exterior algebra through the graded-algebra route.
ExteriorElement graded_route(const LieAlgebraData& L, const ExteriorElement& a, const ExteriorElement& b) {
  auto A = exterior_gerstenhaber_algebra(L);
  return from_graded(bracket(to_graded(a, *A), to_graded(b, *A)), L.dim());
}

}  // namespace

TEST_SUITE("quadratic_lie") {
  TEST_CASE("so(3) structure constants") {
    auto L = so3_algebra();
    CHECK(brute_force_jacobi(L));
    CHECK(check_lie_algebra(L).all_passed());
    auto bad = L;
    // [e1, e2] = e1 + e3 gives Jacobi(e1, e2, e3) = e2.
    bad.set_bracket(0, 1, {1, 0, 1});
    CHECK_FALSE(brute_force_jacobi(bad));
    auto r = check_lie_algebra(bad);
    CHECK(r.any_failed());
  }

  TEST_CASE("invariant forms") {
    auto so3 = so3_algebra();
    auto sl2 = sl2_algebra();
    CHECK(brute_force_invariant(so3, Matrix::identity(3)));
    CHECK(check_invariant_form(so3, Matrix::identity(3)));
    CHECK(brute_force_invariant(sl2, *sl2.form));
    CHECK(check_invariant_form(sl2, *sl2.form));
    Matrix wrong = Matrix::identity(3);
    CHECK_FALSE(brute_force_invariant(sl2, wrong));
    CHECK_FALSE(check_invariant_form(sl2, wrong));
    CHECK(check_invariant_tensor(sl2, sl2.s_tensor()));
  }

  TEST_CASE("Cartan trivector") {
    for (const auto& L : {so3_algebra(), sl2_algebra()}) {
      Matrix s = L.s_tensor();
      auto phi = cartan_trivector(L, s);
      for (std::uint32_t a = 0; a < 3; ++a)
        for (std::uint32_t b = a + 1; b < 3; ++b)
          for (std::uint32_t c = b + 1; c < 3; ++c) CHECK(phi.coefficient({a, b, c}) == phi_oracle(L, s, a, b, c));
    }
    auto phi = cartan_trivector(so3_algebra(), Matrix::identity(3));
    CHECK(phi.coefficient({0, 1, 2}) == Rational(1, 2));
  }

  TEST_CASE("phi is invariant") {
    for (const auto& L : {so3_algebra(), sl2_algebra()}) {
      auto phi = cartan_trivector(L, L.s_tensor());
      for (std::size_t i = 0; i < L.dim(); ++i) {
        auto xi = ExteriorElement::basis_element(L.dim(), i);
        CHECK(gerstenhaber_bracket(L, phi, xi).is_zero());
        CHECK(graded_route(L, phi, xi).is_zero());
      }
    }
  }

  TEST_CASE("[u,u] for u = e1 ^ e2 in so(3)") {
    auto L = so3_algebra();
    ExteriorElement u(3);
    u.add_wedge({0, 1}, Rational(1));
    auto uu = gerstenhaber_bracket(L, u, u);
    CHECK(uu == graded_route(L, u, u));
  }

  TEST_CASE("r-matrix scale for sl(2)") {
    auto L = sl2_algebra();
    Matrix s = L.s_tensor();
    ExteriorElement u(3);
    u.add_wedge({1, 2}, Rational(1));
    auto c = solve_r_matrix_scale(L, s, u);
    REQUIRE(c.has_value());
    auto cu = u * *c;
    auto phi = cartan_trivector(L, s);
    CHECK(gerstenhaber_bracket(L, cu, cu) == phi * Rational(-1));
    CHECK(graded_route(L, cu, cu) == phi * Rational(-1));
    auto rep = check_r_matrix(L, s, cu);
    CHECK(rep.is_r_matrix);
    CHECK(rep.co_jacobi);
    CHECK(rep.cocycle);
  }

  TEST_CASE("zero is not an r-matrix for so(3)") {
    auto L = so3_algebra();
    CHECK_FALSE(check_r_matrix(L, Matrix::identity(3), ExteriorElement(3)).is_r_matrix);
    CHECK_FALSE(cartan_trivector(L, Matrix::identity(3)).is_zero());
  }

  TEST_CASE("g-hat table") {
    auto L = so3_algebra();
    auto A = build_ghat(L);
    const std::size_t D = A.index_of("D");
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(is_zero(A.table(A.index_of("I_" + L.basis[i]), A.index_of("I_" + L.basis[j]))));
    CHECK(is_zero(A.table(D, D)));
    for (std::size_t j = 0; j < 3; ++j) {
      Vector DI = A.bracket(A.basis(D), A.basis(A.index_of("I_" + L.basis[j])));
      CHECK(is_zero(A.bracket(A.basis(D), DI)));
    }
    CHECK(check_graded_lie(A).all_passed());
  }

  TEST_CASE("Q(g) cocycle, pairing and centre") {
    auto L = so3_algebra();
    auto Q = build_Q(L);
    const std::size_t T = Q.index_of("T"), I1 = Q.index_of("I_e1"), L2 = Q.index_of("L_e2"), D = Q.index_of("D");
    CHECK(Q.table(I1, I1) == Q.basis(T));
    CHECK(Q.pair(Q.basis(I1), Q.basis(L2)) == 0);
    CHECK(Q.pair(Q.basis(I1), Q.basis(Q.index_of("L_e1"))) == 1);
    CHECK(Q.pair(Q.basis(T), Q.basis(D)) == 1);
    for (std::size_t j = 0; j < Q.dim(); ++j) CHECK(is_zero(Q.table(T, j)));
    for (std::size_t j = 0; j < 3; ++j) {
      Vector Dxi = Q.bracket(Q.basis(D), Q.basis(Q.index_of("L_" + L.basis[j])));
      CHECK(is_zero(Q.bracket(Q.basis(D), Dxi)));
    }
  }

  TEST_CASE("graded suite on abelian, so(3) and sl(2)") {
    for (const auto& L : {abelian_algebra(2), so3_algebra(), sl2_algebra()}) {
      CAPTURE(L.name);
      CHECK(check_graded_lie(build_ghat(L)).all_passed());
      CHECK(check_graded_lie(build_Q(L)).all_passed());
      CHECK(check_graded_lie(build_Qs(L, L.s_tensor())).all_passed());
    }
  }

  TEST_CASE("Manin triples") {
    for (const auto& L : {so3_algebra(), sl2_algebra()}) {
      CAPTURE(L.name);
      auto q = q_manin_triple(L);
      CHECK(check_manin_triple(q.algebra, q.A, q.B).all_passed());
      auto qd = qd_lagrangian_pair(L);
      CHECK(check_manin_triple(qd.algebra, qd.A, qd.B).all_passed());
      // A is not transverse to itself.
      CHECK(check_manin_triple(q.algebra, q.A, q.A).any_failed());
    }
  }

  TEST_CASE("r-hat graph is an ideal and the tilt is not") {
    for (const auto& L : {so3_algebra(), sl2_algebra()}) {
      auto r = check_rhat_quasitriangular(L);
      CHECK(r.is_ideal);
      CHECK(r.control_rejected);
    }
  }

  TEST_CASE("generalized Manin triples") {
    auto T = double_generalized_manin_triple();
    auto r = check_generalized_manin_triple(T);
    CHECK(r.valid);
    CHECK(r.exact);
    CHECK(r.criterion == r.exact);
    // Independent: k Lagrangian for s^{-1} and s# of k-perp has full rank on the double.
    Matrix form = *inverse(T.s);
    for (const auto& a : T.k)
      for (const auto& b : T.k) CHECK(bilinear(a, form, b) == 0);
    auto perp = orthogonal_complement(T.k, Matrix::identity(6));
    std::vector<Vector> image;
    for (const auto& v : perp) image.push_back(T.s.apply(v));
    CHECK(rank_of(image, 6) == perp.size());

    auto D = degenerate_generalized_manin_triple();
    auto rd = check_generalized_manin_triple(D);
    CHECK(rd.criterion == rd.exact);
    CHECK_FALSE(rd.transitive);

    // h not closed: span of (e1, 0) and (e2, 0) in so(3) + so(3).
    auto so3 = so3_algebra();
    auto f = direct_sum(so3, so3, -1, "so3+so3bar");
    GeneralizedManinTriple bad{f, f.s_tensor(), {unit(6, 0), unit(6, 1)}, {unit(6, 3), unit(6, 4), unit(6, 5)}};
    std::string w;
    CHECK_FALSE(is_lie_subalgebra(f, bad.h, &w));
    CHECK_FALSE(check_generalized_manin_triple(bad).valid);
  }

  TEST_CASE("quadruple conditions and round trip") {
    auto Q = double_quadruple();
    auto r = check_qp_group_quadruple(Q);
    CHECK(r.report.all_passed());
    CHECK(check_quadruple_round_trip(Q).all_passed());
    // rho* is the adjoint of rho for the two forms.
    Gen g(7);
    for (int t = 0; t < 10; ++t) {
      Vector x = g.vector(Q.f.dim()), xi = g.vector(Q.g.dim());
      CHECK(bilinear(r.rho_star.apply(x), *Q.g.form, xi) == bilinear(x, *Q.f.form, Q.rho.apply(xi)));
    }
  }

  TEST_CASE("Lie algebra identities on random elements") {
    Gen g(8);
    for (const auto& L : {so3_algebra(), sl2_algebra()}) {
      for (int t = 0; t < qpg::testing::kTrials; ++t) {
        Vector x = g.vector(3), y = g.vector(3), z = g.vector(3);
        CHECK(L.bracket(x, y) == scale(L.bracket(y, x), -1));
        Vector j = add(add(L.bracket(x, L.bracket(y, z)), L.bracket(y, L.bracket(z, x))), L.bracket(z, L.bracket(x, y)));
        CHECK(is_zero(j));
        CHECK(bilinear(L.bracket(x, y), *L.form, z) + bilinear(y, *L.form, L.bracket(x, z)) == 0);
      }
    }
  }

  TEST_CASE("exterior bracket agrees with the graded route on random elements") {
    Gen g(9);
    auto L = sl2_algebra();
    for (int t = 0; t < qpg::testing::kTrials; ++t) {
      auto a = g.exterior(3, static_cast<std::size_t>(g.between(1, 2)));
      auto b = g.exterior(3, static_cast<std::size_t>(g.between(1, 2)));
      CHECK(gerstenhaber_bracket(L, a, b) == graded_route(L, a, b));
    }
  }

  TEST_CASE("graded Jacobi in Q(g) on random elements") {
    Gen g(10);
    auto Q = build_Q(sl2_algebra());
    for (int t = 0; t < qpg::testing::kTrials; ++t) {
      // Homogeneous elements of random degree.
      auto pick = [&] {
        int d = static_cast<int>(g.between(-2, 1));
        Vector v(Q.dim());
        for (std::size_t i = 0; i < Q.dim(); ++i)
          if (Q.degree(i) == d) v[i] = g.rational();
        return std::make_pair(v, d);
      };
      auto [x, dx] = pick();
      auto [y, dy] = pick();
      auto [z, dz] = pick();
      auto sign = [](int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); };
      // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
      Vector lhs = Q.bracket(x, Q.bracket(y, z));
      Vector rhs = add(Q.bracket(Q.bracket(x, y), z), scale(Q.bracket(y, Q.bracket(x, z)), sign(dx * dy)));
      CHECK(lhs == rhs);
      CHECK(Q.bracket(x, y) == scale(Q.bracket(y, x), -sign(dx * dy)));
      (void)dz;
    }
  }
}
