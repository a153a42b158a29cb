#include "qpg/examples.hpp"

#include <map>
#include <stdexcept>

namespace qpg {

namespace {

using Points = std::vector<std::vector<Rational>>;

PolyMatrix matrix_block(const RingPtr& R, std::size_t offset) {
  return {{R->var(offset), R->var(offset + 1)}, {R->var(offset + 2), R->var(offset + 3)}};
}

PolyMatrix adjugate(const PolyMatrix& m) {
  return {{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}};
}

std::vector<Polynomial> flatten(const CoordinateRing& R, const PolyMatrix& m) {
  std::vector<Polynomial> out;
  for (const auto& row : m)
    for (const auto& e : row) out.push_back(R.reduce(e));
  return out;
}

// Empty when the matrices agree modulo the ideal, otherwise the first residue.
std::string matrix_residue(const CoordinateRing& R, const PolyMatrix& a, const PolyMatrix& b) {
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a[r].size(); ++c) {
      Polynomial d = R.reduce(a[r][c] - b[r][c]);
      if (!d.is_zero()) return "entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + "): " + R.print(d);
    }
  return {};
}

PolyMatrix identity_matrix(std::size_t nvars) {
  return {{Polynomial::constant(nvars, 1), Polynomial(nvars)}, {Polynomial(nvars), Polynomial::constant(nvars, 1)}};
}

Vector v6(std::initializer_list<int> xs) {
  Vector v;
  for (int x : xs) v.push_back(Rational(x));
  return v;
}

MultivectorField linear_field(const RingPtr& R, const Matrix& A, const Rational& sign) {
  std::vector<Polynomial> comps;
  for (std::size_t k = 0; k < A.rows(); ++k) {
    Polynomial p = R->zero();
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (A(k, j) != 0) p += R->var(j) * (A(k, j) * sign);
    comps.push_back(p);
  }
  return MultivectorField::vector_field(R, comps);
}

QPSpace plane_translations(const Rational& c) {
  auto R = CoordinateRing::make({"x", "y"});
  auto g = abelian_algebra(2);
  GAction act{g, {MultivectorField::coordinate(R, 0), MultivectorField::coordinate(R, 1)}};
  MultivectorField pi(R);
  pi.add_term({0, 1}, R->constant(c));
  return make_space("R2-translations", act, pi);
}

QPSpace so3_space(bool rotations, bool linear_poisson) {
  auto R = CoordinateRing::make({"x", "y", "z"});
  auto m = so3_matrices();
  GAction act = trivial_action(m.data, R);
  if (rotations)
    for (std::size_t i = 0; i < 3; ++i) act.rho[i] = linear_field(R, m.basis[i], Rational(-1));
  MultivectorField pi(R);
  if (linear_poisson) {
    pi.add_term({0, 1}, R->var(2));
    pi.add_term({1, 2}, R->var(0));
    pi.add_term({2, 0}, R->var(1));
  }
  std::string name = rotations ? "R3-rotations" : "R3-trivial";
  if (linear_poisson) name += "-linear";
  return make_space(name, act, pi);
}

Report first_failure_only(const Report& r) {
  Report out(r.subject());
  for (const auto& c : r.checks())
    if (c.status != Status::pass) out.add(c);
  return out;
}

}  // namespace

// -- shared builders --------------------------------------------------------

HamiltonianSpace sl2_conjugation(const std::string& prefix) {
  auto G = sl2_group(prefix);
  auto act = conjugation_action(G);
  Matrix s = act.algebra.s_tensor();
  MultivectorField pi(G.ring);
  for (std::size_t i = 0; i < 3; ++i)
    pi += wedge(left_field(G, 0, G.algebra.matrix_of(s.row(i))), right_field(G, 0, G.algebra.basis[i])) *
          Rational(1, 2);
  auto M = make_space("SL2-conjugation", act, pi, left_frame(G));
  PolyMap id{G.ring, G.ring, {}};
  for (std::size_t k = 0; k < G.ring->nvars(); ++k) id.components.push_back(G.ring->var(k));
  return {M, G, id};
}

QPSpace sl2_double_factor(const std::string& prefix, int form_sign) {
  auto G = sl2_group(prefix);
  auto d = direct_sum(G.algebra.data, G.algebra.data, form_sign, form_sign > 0 ? "sl2+sl2" : "sl2+sl2bar");
  GAction act{d, {}};
  for (std::size_t i = 0; i < 3; ++i) act.rho.push_back(-right_field(G, 0, G.algebra.basis[i]));
  for (std::size_t i = 0; i < 3; ++i) act.rho.push_back(left_field(G, 0, G.algebra.basis[i]));
  return make_space("SL2-double-factor", act, MultivectorField(G.ring), left_frame(G));
}

HamiltonianSpace sl2_double() {
  auto Sa = sl2_double_factor("a"), Sb = sl2_double_factor("b");
  auto D = fuse(product(Sa, Sb, {"", ""}), Sa.algebra());
  D.name = "D(SL2)";
  auto GG = product_group({sl2_group("x"), sl2_group("x")}, {"_1", "_2"});
  const auto& R = D.ring();
  auto A = matrix_block(R, 0), B = matrix_block(R, 4);
  auto m1 = poly_multiply(A, adjugate(B)), m2 = poly_multiply(adjugate(A), B);
  PolyMap Phi{R, GG.ring, flatten(*R, m1)};
  auto second = flatten(*R, m2);
  Phi.components.insert(Phi.components.end(), second.begin(), second.end());
  return {D, GG, Phi};
}

HamiltonianSpace sl2_amm() {
  auto H = fuse(sl2_double(), sl2_group("x"));
  H.space.name = "AMM(SL2)";
  return H;
}

PolyMap amm_source(const HamiltonianSpace& amm, const HamiltonianSpace& conj) {
  const auto& R = amm.space.ring();
  return {R, conj.space.ring(), flatten(*R, poly_multiply(matrix_block(R, 0), adjugate(matrix_block(R, 4))))};
}

PolyMap amm_target(const HamiltonianSpace& amm, const HamiltonianSpace& conj) {
  const auto& R = amm.space.ring();
  return {R, conj.space.ring(), flatten(*R, poly_multiply(adjugate(matrix_block(R, 4)), matrix_block(R, 0)))};
}

Report check_amm_groupoid() {
  Report r("amm_groupoid");
  // Free SL(2) variables: a1, a2, a3, b3 for triples (a1, a2, b2 for pairs).
  auto G = product_group({sl2_group("a"), sl2_group("a"), sl2_group("a"), sl2_group("b")}, {"1", "2", "3", "3"});
  const auto& R = G.ring;
  const std::size_t n = R->nvars();
  auto inv = [](const PolyMatrix& m) { return adjugate(m); };  // det = 1
  using Arrow = std::pair<PolyMatrix, PolyMatrix>;
  auto mul = [](const Arrow& g, const Arrow& h) {
    return Arrow{poly_multiply(g.first, h.first), poly_multiply(g.first, h.second)};
  };
  auto src = [&](const Arrow& g) { return poly_multiply(g.first, inv(g.second)); };
  auto tgt = [&](const Arrow& g) { return poly_multiply(inv(g.second), g.first); };
  auto unit_at = [&](const PolyMatrix& x) { return Arrow{identity_matrix(n), inv(x)}; };
  auto inverse_of = [&](const Arrow& g) {
    auto ai = inv(g.first);
    return Arrow{ai, poly_multiply(poly_multiply(ai, g.second), ai)};
  };
  auto same = [&](const Arrow& g, const Arrow& h) {
    std::string w = matrix_residue(*R, g.first, h.first);
    if (w.empty()) w = matrix_residue(*R, g.second, h.second);
    return w;
  };
  auto a1 = matrix_block(R, 0), a2 = matrix_block(R, 4), a3 = matrix_block(R, 8), b3 = matrix_block(R, 12);
  // Composable when t(g) = s(h): b_k = a_k b_{k+1} a_{k+1}^{-1}.
  Arrow g3{a3, b3};
  Arrow g2{a2, poly_multiply(poly_multiply(a2, b3), inv(a3))};
  Arrow g1{a1, poly_multiply(poly_multiply(a1, g2.second), inv(a2))};

  r.run("composable", [&] {
    auto w = matrix_residue(*R, tgt(g1), src(g2));
    return verdict("", w.empty(), "t(g) - s(h) " + w);
  });
  r.run("source_of_product", [&] {
    auto w = matrix_residue(*R, src(mul(g1, g2)), src(g1));
    return verdict("", w.empty(), "s(gh) - s(g) " + w);
  });
  r.run("target_of_product", [&] {
    auto w = matrix_residue(*R, tgt(mul(g1, g2)), tgt(g2));
    return verdict("", w.empty(), "t(gh) - t(h) " + w);
  });
  r.run("associative", [&] {
    auto w = same(mul(mul(g1, g2), g3), mul(g1, mul(g2, g3)));
    return verdict("", w.empty(), "(gh)k - g(hk) " + w);
  });
  r.run("units", [&] {
    auto e = unit_at(a1);
    auto w = matrix_residue(*R, src(e), a1);
    if (w.empty()) w = matrix_residue(*R, tgt(e), a1);
    if (w.empty()) w = same(mul(unit_at(src(g1)), g1), g1);
    if (w.empty()) w = same(mul(g1, unit_at(tgt(g1))), g1);
    return verdict("", w.empty(), w);
  });
  r.run("inverses", [&] {
    auto gi = inverse_of(g1);
    auto w = same(mul(g1, gi), unit_at(src(g1)));
    if (w.empty()) w = same(mul(gi, g1), unit_at(tgt(g1)));
    return verdict("", w.empty(), w);
  });
  return r;
}

Report check_amm_coisotropy(int third_sign) {
  auto gam = sl2_amm().space;
  auto g = sl2_algebra();
  auto P12 = fuse(product(gam, gam, {"1", "2"}), g);
  auto R3 = product_ring({P12.ring(), gam.ring()}, {"", "3"});
  auto pi = P12.pi.embed(R3, 0) + gam.pi.embed(R3, 16) * Rational(third_sign);
  // Variable blocks a1 b1 a2 b2 a3 b3 reordered to b1 a3 b3 | a1 a2 b2 so that
  // the first twelve variables are eliminated by the graph relations.
  std::vector<std::size_t> map(24);
  auto put = [&](std::size_t from, std::size_t to) {
    for (std::size_t k = 0; k < 4; ++k) map[from + k] = to + k;
  };
  put(0, 12), put(4, 0), put(8, 16), put(12, 20), put(16, 4), put(20, 8);
  std::vector<std::string> names(24);
  for (std::size_t i = 0; i < 24; ++i) names[map[i]] = R3->vars()[i];
  auto v = [&](std::size_t i) { return Polynomial::variable(24, map[i]); };
  auto M = [&](std::size_t off) { return PolyMatrix{{v(off), v(off + 1)}, {v(off + 2), v(off + 3)}}; };
  auto det = [&](std::size_t off) { return v(off) * v(off + 3) - v(off + 1) * v(off + 2) - Polynomial::constant(24, 1); };
  std::vector<Polynomial> base_ideal;
  for (std::size_t off = 0; off < 24; off += 4) base_ideal.push_back(det(off));
  auto base = CoordinateRing::make(names, base_ideal);
  auto a1 = M(0), b1 = M(4), a2 = M(8), b2 = M(12), a3 = M(16), b3 = M(20);
  // (a1,b1)(a2,b2) = (a3,b3) with b1 = a1 b2 a2^{-1}.
  auto b1c = poly_multiply(poly_multiply(a1, b2), adjugate(a2));
  auto a3c = poly_multiply(a1, a2), b3c = poly_multiply(a1, b2);
  std::vector<Polynomial> S;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) S.push_back(b1[r][c] - b1c[r][c]);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) S.push_back(a3[r][c] - a3c[r][c]);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) S.push_back(b3[r][c] - b3c[r][c]);
  S.push_back(det(0)), S.push_back(det(8)), S.push_back(det(12));
  auto Sring = CoordinateRing::make(names, S, MonomialOrder{MonomialOrder::Kind::block, {12, 12}});
  return check_coisotropic_subvariety(pi.relabel(base, map), Sring);
}

QPBialgebroid point_bialgebra(const LieAlgebraData& g) {
  auto A = algebra_over_point(g);
  QPBialgebroid B{A, g, {}, DerivationRules(A.algebra->ngens(), A.algebra->zero())};
  for (std::size_t i = 0; i < g.dim(); ++i) B.rho.push_back(A.section(i));
  return B;
}

QPBialgebroid tangent_bialgebroid(const HamiltonianSpace& conj, bool perturbed) {
  const auto& G = conj.group;
  auto A = tangent_algebroid("T" + G.name, G.ring, left_frame(G), G.algebra.data);
  auto db = dual_bases(G.algebra.data);
  std::vector<OneForm> coframe;
  for (std::size_t i = 0; i < G.algebra.data.dim(); ++i) coframe.push_back(theta_left(G, 0, db.e_dual[i]));
  auto P = from_multivector(A, coframe, conj.space.pi);
  if (perturbed) P += A.section(1) * A.section(2);
  QPBialgebroid B{A, G.algebra.data, {}, hamiltonian_rules(A, P)};
  for (const auto& r : conj.space.action.rho) B.rho.push_back(from_multivector(A, coframe, r));
  return B;
}

GeneralizedManinTriple double_generalized_manin_triple() {
  auto g = sl2_algebra();
  auto d = direct_sum(g, g, -1, "sl2+sl2bar");
  GeneralizedManinTriple T{d, d.s_tensor(), {}, {}};
  for (std::size_t i = 0; i < 3; ++i) T.h.push_back(add(unit(6, i), unit(6, 3 + i)));
  T.k = {v6({1, 0, 0, -1, 0, 0}), v6({0, 1, 0, 0, 0, 0}), v6({0, 0, 0, 0, 0, 1})};
  return T;
}

GeneralizedManinTriple degenerate_generalized_manin_triple() {
  auto g = sl2_algebra();
  auto d = direct_sum(g, g, 1, "sl2+sl2");
  Matrix s(6, 6);
  Matrix sg = g.s_tensor();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s(i, j) = sg(i, j);
  GeneralizedManinTriple T{d, s, {}, {}};
  for (std::size_t i = 0; i < 3; ++i) T.h.push_back(add(unit(6, i), unit(6, 3 + i)));
  for (std::size_t i = 0; i < 3; ++i) T.k.push_back(unit(6, i));
  return T;
}

QPGroupQuadruple double_quadruple() {
  auto T = double_generalized_manin_triple();
  QPGroupQuadruple Q{sl2_algebra(), T.f, T.h, {unit(6, 0), unit(6, 1), unit(6, 2)}, Matrix(6, 3)};
  for (std::size_t i = 0; i < 3; ++i) Q.rho(i, i) = 1, Q.rho(3 + i, i) = 1;
  return Q;
}

Report check_quadruple_round_trip(const QPGroupQuadruple& Q) {
  Report r("quadruple_round_trip:" + Q.f.name);
  auto qr = check_qp_group_quadruple(Q);
  r.add_all(qr.report, "quadruple.");
  LinearManinMorphism M{Q.f, direct_sum(Q.g, Q.g, -1, Q.g.name + "+" + Q.g.name + "bar"),
                        span_basis(Q.h, Q.f.dim()), {}, qr.K};
  const std::size_t n = Q.g.dim(), m = Q.f.dim();
  for (std::size_t i = 0; i < n; ++i) M.A2.push_back(add(unit(2 * n, i), unit(2 * n, n + i)));
  auto mr = check_manin_pair_morphism_linear(M);
  r.add_all(mr.report, "morphism.");
  if (!mr.valid) {
    r.add(fail("rho_recovered", "phi_K unavailable"));
    return r;
  }
  // phi_K(x) represents (rho* x, 0) modulo the diagonal, so rho* x = v1 - v2.
  Subspace hs = span_basis(Q.hstar, m), h = span_basis(Q.h, m);
  std::vector<Vector> rho_star_cols;
  for (const auto& x : hs) {
    Vector v = apply_phi(mr, M, x);
    Vector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = v[i] - v[n + i];
    rho_star_cols.push_back(d);
  }
  r.run("rho_star_recovered", [&] {
    for (std::size_t a = 0; a < hs.size(); ++a)
      if (rho_star_cols[a] != qr.rho_star.apply(hs[a]))
        return fail("", "h* basis " + std::to_string(a) + ": " + to_string(rho_star_cols[a]));
    return pass("");
  });
  // rho(xi) in h is fixed by <x, rho xi>_f = <rho* x, xi>_g for x in h*.
  r.run("rho_recovered", [&] {
    const Matrix& F = *Q.f.form;
    const Matrix& Gf = *Q.g.form;
    Matrix pairing(hs.size(), h.size());
    for (std::size_t a = 0; a < hs.size(); ++a)
      for (std::size_t b = 0; b < h.size(); ++b) pairing(a, b) = bilinear(hs[a], F, h[b]);
    for (std::size_t i = 0; i < n; ++i) {
      Vector rhs(hs.size());
      for (std::size_t a = 0; a < hs.size(); ++a) rhs[a] = bilinear(rho_star_cols[a], Gf, unit(n, i));
      auto c = solve(pairing, rhs);
      if (!c) return fail("", "h* does not pair nondegenerately with h");
      Vector v(m);
      for (std::size_t b = 0; b < h.size(); ++b) v = add(v, scale(h[b], (*c)[b]));
      if (v != Q.rho.apply(unit(n, i)))
        return fail("", "rho(" + Q.g.basis[i] + ") read back as " + to_string(v));
    }
    return pass("");
  });
  return r;
}

CrossOracle cross_oracle(const QPSpace& M) {
  CrossOracle c;
  c.chart_report = check_quasi_poisson(M);
  auto T = cotangent_presentation(M.ring());
  auto P = build_Gsmall(M.algebra(), M.s);
  c.graded_report = check_poisson_map(structure_map(M, P, T));
  c.chart = c.chart_report.all_passed();
  c.graded = c.graded_report.all_passed();
  return c;
}

CrossOracle cross_oracle(const HamiltonianSpace& H) {
  CrossOracle c;
  c.chart_report = check_quasi_poisson(H.space);
  c.chart_report.add_all(check_moment_map(H), "moment_map.");
  auto T = cotangent_presentation(H.space.ring());
  auto P = build_Gbig(H.group);
  c.graded_report = check_poisson_map(structure_map(H, P, T));
  c.chart = c.chart_report.all_passed();
  c.graded = c.graded_report.all_passed();
  return c;
}

Report check_cross_oracle(const std::string& name, const CrossOracle& c) {
  auto first = [](const Report& r) {
    for (const auto& ch : r.checks())
      if (ch.status != Status::pass) return ch.name + ": " + ch.witness;
    return std::string();
  };
  Report r;
  r.add(verdict(name + ".chart", c.chart, first(c.chart_report)));
  r.add(verdict(name + ".graded", c.graded, first(c.graded_report)));
  r.add(verdict(name + ".agree", c.chart == c.graded,
                std::string("chart ") + (c.chart ? "pass" : "fail") + ", graded " + (c.graded ? "pass" : "fail")));
  return r;
}

// -- fixtures ---------------------------------------------------------------

namespace {

void graded_suite(Report& r, const LieAlgebraData& L, const std::string& p) {
  r.add_all(check_graded_lie(build_ghat(L)), p + "ghat.");
  r.add_all(check_graded_lie(build_Q(L)), p + "Q.");
  r.add_all(check_graded_lie(build_Qs(L, L.s_tensor())), p + "Qs.");
  auto mt = q_manin_triple(L);
  r.add_all(check_manin_triple(mt.algebra, mt.A, mt.B), p + "manin_triple_Q.");
  auto qd = qd_lagrangian_pair(L);
  r.add_all(check_manin_triple(qd.algebra, qd.A, qd.B), p + "manin_triple_Qd.");
}

Report run_abelian(const ExampleOptions&) {
  Report r("abelian-r2");
  auto L = abelian_algebra(2);
  r.add_all(check_lie_algebra(L), "algebra.");
  graded_suite(r, L, "");
  auto Ps = build_Gsmall(L, L.s_tensor());
  r.add_all(check_graded_poisson(*Ps.algebra), "G_small.");
  auto M = plane_translations(Rational(1));
  r.add_all(check_quasi_poisson(M), "quasi_poisson.");
  r.add_all(check_cotangent_differential(M, 1), "cotangent.");
  r.add_all(check_cotangent_differential(M, -1), "cotangent_anchor.");
  r.add_all(check_bracket_anchor(M), "bracket_anchor.");
  r.add_all(check_quasi_symplectic(M, {{0, 0}, {1, 2}}).report, "quasi_symplectic.");
  ExteriorElement u(2);
  u.add_wedge({0, 1}, Rational(1));
  r.add_all(twist_by_r_matrix(M, u).report, "twist.");
  r.add_all(check_cross_oracle("cross_oracle", cross_oracle(M)), "");
  return r;
}

Report run_so3(const ExampleOptions&) {
  Report r("so3-trivial");
  auto L = so3_algebra();
  r.add_all(check_lie_algebra(L), "algebra.");
  r.add(verdict("algebra.matrices", check_matrix_realization(so3_matrices())));
  graded_suite(r, L, "");
  r.add_all(check_rhat_quasitriangular(L).report, "rhat.");
  auto Ps = build_Gsmall(L, L.s_tensor());
  r.add_all(check_graded_poisson(*Ps.algebra), "G_small.");
  r.add_all(check_multiplication(Ps), "G_small_multiplication.");
  Points pts{{0, 0, 0}, {1, 0, 0}, {1, 2, 3}};
  auto M = so3_space(false, false);
  r.add_all(check_quasi_poisson(M), "quasi_poisson.");
  r.add_all(check_cotangent_differential(M, 1), "cotangent.");
  r.add_all(check_coisotropic_stabilizers(M.action, M.s, pts).report, "coisotropic_stabilizers.");
  r.add_all(check_cross_oracle("cross_oracle.trivial", cross_oracle(M)), "");
  auto rot = so3_space(true, false);
  r.add_all(check_quasi_poisson(rot), "rotations.quasi_poisson.");
  r.add_all(check_cotangent_differential(rot, 1), "rotations.cotangent.");
  r.add_all(check_coisotropic_stabilizers(rot.action, rot.s, pts).report, "rotations.coisotropic_stabilizers.");
  r.add_all(check_cross_oracle("cross_oracle.rotations", cross_oracle(rot)), "");
  auto lin = so3_space(true, true);
  r.add_all(check_quasi_poisson(lin), "linear_poisson.quasi_poisson.");
  r.add_all(check_cotangent_differential(lin, 1), "linear_poisson.cotangent.");
  r.add_all(check_cross_oracle("cross_oracle.linear_poisson", cross_oracle(lin)), "");
  return r;
}

Report run_conjugation(const ExampleOptions&) {
  Report r("sl2-conjugation");
  auto H = sl2_conjugation();
  Points pts{{1, 0, 0, 1}, {-1, 0, 0, -1}, {2, 1, 1, 1}};
  r.add_all(check_matrix_group(H.group), "group.");
  r.add_all(check_quasi_poisson(H.space), "quasi_poisson.");
  r.add_all(check_moment_map(H), "moment_map.");
  r.add_all(check_i_map(H, pts), "i_map.");
  r.add_all(check_cotangent_differential(H.space, 1), "cotangent.");
  r.add_all(check_cotangent_differential(H.space, -1), "cotangent_anchor.");
  r.add_all(check_bracket_anchor(H.space), "bracket_anchor.");
  ExteriorElement u(3);
  u.add_wedge({1, 2}, Rational(1));
  if (auto c = solve_r_matrix_scale(H.space.algebra(), H.space.s, u)) {
    r.add_all(twist_by_r_matrix(H.space, u * *c).report, "twist.");
  } else {
    r.add(fail("twist.r_matrix", "no rational multiple of e^f is an r-matrix"));
  }
  r.add_all(first_failure_only(twist_by_r_matrix(H.space, u * Rational(3)).report), "control.twist_wrong_scale.");
  r.add_all(check_cross_oracle("cross_oracle", cross_oracle(H)), "");
  auto Ps = build_Gsmall(H.space.algebra(), H.space.s);
  r.add(verdict("cross_oracle.G_small",
                check_poisson_map(structure_map(H.space, Ps, cotangent_presentation(H.space.ring()))).all_passed()));
  return r;
}

Report run_double(const ExampleOptions&) {
  Report r("double-sl2");
  Points at_identity{{1, 0, 0, 1}}, factor_pts{{1, 0, 0, 1}, {2, 1, 1, 1}};
  auto F = sl2_double_factor("x", 1);
  r.add_all(check_quasi_poisson(F), "factor.quasi_poisson.");
  r.add_all(check_quasi_symplectic(F, factor_pts).report, "factor.quasi_symplectic.");
  r.add_all(check_cotangent_differential(F, 1), "factor.cotangent.");
  auto Fbar = sl2_double_factor("x", -1);
  r.add_all(check_coisotropic_stabilizers(Fbar.action, Fbar.s, factor_pts).report, "factor_gbar.coisotropic_stabilizers.");
  r.add_all(first_failure_only(check_coisotropic_stabilizers(F.action, F.s, at_identity).report),
            "control.coisotropic_stabilizers_plus_form.");
  r.add_all(first_failure_only(check_quasi_symplectic(Fbar, at_identity).report), "control.quasi_symplectic_gbar.");
  auto D = sl2_double();
  Points pts{{1, 0, 0, 1, 1, 0, 0, 1}, {1, 1, 0, 1, 2, 1, 1, 1}};
  r.add_all(check_quasi_poisson(D.space), "double.quasi_poisson.");
  r.add_all(check_moment_map(D), "double.moment_map.");
  r.add_all(check_quasi_symplectic(D.space, pts).report, "double.quasi_symplectic.");
  r.add_all(check_i_map(D, pts), "double.i_map.");
  r.add_all(check_cotangent_differential(D.space, 1), "double.cotangent.");
  r.add_all(check_cross_oracle("cross_oracle.double", cross_oracle(D.space)), "");
  return r;
}

Report run_amm(const ExampleOptions& opts) {
  Report r("amm-sl2");
  auto A = sl2_amm();
  auto C = sl2_conjugation();
  r.add_all(check_quasi_poisson(A.space), "quasi_poisson.");
  r.add_all(check_moment_map(A), "moment_map.");
  r.add_all(check_cotangent_differential(A.space, 1), "cotangent.");
  r.add_all(check_qp_morphism(amm_source(A, C), A.space, C.space, false), "source_quasi_poisson.");
  r.add_all(check_qp_morphism(amm_target(A, C), A.space, C.space, true), "target_anti_quasi_poisson.");
  r.add_all(first_failure_only(check_qp_morphism(amm_target(A, C), A.space, C.space, false)),
            "control.target_quasi_poisson.");
  r.add_all(check_amm_groupoid(), "groupoid.");
  r.add_all(check_cross_oracle("cross_oracle", cross_oracle(A)), "");
  if (opts.run_slow) {
    r.add_all(check_amm_coisotropy(-1), "coisotropy.");
    r.add_all(check_amm_coisotropy(1), "control.coisotropy_plus.");
  } else {
    r.skip("coisotropy", "slow check skipped");
    r.skip("control.coisotropy_plus", "slow check skipped");
  }
  return r;
}

Report run_fusion(const ExampleOptions&) {
  Report r("fusion-sl2");
  auto a = sl2_conjugation("x"), b = sl2_conjugation("y");
  auto F = fusion_product(a, b);
  r.add_all(check_quasi_poisson(F.space), "quasi_poisson.");
  r.add_all(check_moment_map(F), "moment_map.");
  r.add_all(check_fusion_algebroid(a, b), "algebroid.");
  r.add_all(check_fusion_algebroid(a, b, {true}), "control.algebroid_without_correction.");
  auto fc = fusion_crosscheck(a, b);
  r.add_all(fc.report, "crosscheck.");
  auto nc = fusion_crosscheck(a, b, false);
  r.add_all(nc.report, "crosscheck_without_cocycle.");
  auto F21 = fusion_product(b, a);
  auto br = braiding_map(a, b, conjugation_group_action(b.group), F21.space.ring());
  r.add_all(check_qp_morphism(br, F.space, F21.space), "braiding.");
  r.add_all(check_cross_oracle("cross_oracle", cross_oracle(F)), "");
  return r;
}

Report run_bialgebra(const ExampleOptions&) {
  Report r("qp-bialgebra-sl2");
  for (const auto& g : {sl2_algebra(), so3_algebra()}) {
    auto B = point_bialgebra(g);
    r.add_all(check_qp_bialgebroid(B), g.name + "_over_point.");
    r.add_all(check_dual_differential(B), g.name + "_over_point.dual.");
  }
  auto H = sl2_conjugation();
  auto T = tangent_bialgebroid(H);
  r.add_all(check_qp_bialgebroid(T), "tangent.");
  r.add_all(check_dual_differential(T, left_frame(H.group)), "tangent.dual.");
  r.add_all(compare_with_cotangent(T, H.space), "tangent.cotangent.");
  auto P = tangent_bialgebroid(H, true);
  r.add_all(check_qp_bialgebroid(P), "control.perturbed.");
  return r;
}

Report run_cartan_dirac(const ExampleOptions& opts) {
  Report r("cartan-dirac-sl2");
  auto G = sl2_group("x");
  auto CD = cartan_dirac(G);
  const auto& E = CD.parent;
  r.add_all(validate_courant(E), "courant.");
  r.run("courant.constants_lie_bracket", [&] {
    const auto& d = *E.action;
    for (std::size_t a = 0; a < E.rank(); ++a)
      for (std::size_t b = 0; b < E.rank(); ++b) {
        auto br = courant_bracket(E, E.unit(a), E.unit(b));
        Vector lie = d.algebra.bracket(unit(E.rank(), a), unit(E.rank(), b));
        for (std::size_t k = 0; k < E.rank(); ++k)
          if (E.ring->reduce(br[k] - E.ring->constant(lie[k])) != E.ring->zero())
            return fail("", E.frame_names[a] + ", " + E.frame_names[b] + ": " + section_to_string(E, br));
      }
    return pass("");
  });
  r.add_all(check_dirac(CD, {{1, 0, 0, 1}, {2, 1, 1, 1}, {-1, 0, 0, -1}}), "dirac.");
  if (opts.run_slow)
    r.add_all(check_courant_axioms(E, generating_sections(E)), "axioms.");
  else
    r.skip("axioms", "slow check skipped");
  return r;
}

Report run_courant_standard(const ExampleOptions&) {
  Report r("courant-standard");
  auto R2 = CoordinateRing::make({"x", "y"});
  auto R3 = CoordinateRing::make({"x", "y", "z"});
  auto R4 = CoordinateRing::make({"x", "y", "z", "w"});
  auto E2 = standard_courant(R2, {}, "T R2");
  auto E3 = standard_courant(R3, {{{0, 1, 2}, R3->one()}}, "T R3 twisted by dx dy dz");
  auto E30 = standard_courant(R3, {}, "T R3");
  auto E4 = standard_courant(R4, {{{1, 2, 3}, R4->var(0)}}, "T R4 twisted by x dy dz dw");
  r.add_all(validate_courant(E2), "R2.valid.");
  r.add_all(check_courant_axioms(E2, generating_sections(E2)), "R2.axioms.");
  r.add_all(validate_courant(E3), "R3.valid.");
  r.add_all(check_courant_axioms(E3, generating_sections(E3)), "R3.axioms.");
  r.add_all(validate_courant(E4), "control.R4.valid.");
  r.add_all(first_failure_only(check_courant_axioms(E4, generating_sections(E4, false))), "control.R4.axioms.");
  r.add_all(check_dirac(tangent_dirac(E2), {{0, 0}}), "R2.tangent_dirac.");
  r.add_all(check_dirac(cotangent_dirac(E2), {{0, 0}}), "R2.cotangent_dirac.");

  MultivectorField p1(R2);
  p1.add_term({0, 1}, R2->one());
  MultivectorField p2(R3);
  p2.add_term({1, 2}, R3->var(0)), p2.add_term({0, 2}, -R3->var(1)), p2.add_term({0, 1}, R3->var(2));
  MultivectorField p3(R3);
  p3.add_term({0, 1}, R3->one()), p3.add_term({1, 2}, R3->var(1) * R3->var(1) * R3->var(1));
  struct Case {
    std::string name;
    const CourantData* E;
    MultivectorField pi;
  };
  for (const auto& c : std::vector<Case>{{"graph_dxdy", &E2, p1}, {"graph_linear_so3", &E30, p2}, {"graph_cubic", &E30, p3}}) {
    bool poisson = schouten(c.pi, c.pi).is_zero();
    auto rep = check_dirac(graph_of_bivector(*c.E, c.pi), {});
    bool dirac = rep.all_passed();
    r.add(verdict(c.name + ".schouten_zero", poisson, "[pi,pi] = " + schouten(c.pi, c.pi).to_string()));
    r.add(verdict(c.name + ".dirac", dirac));
    r.add(verdict(c.name + ".agree", poisson == dirac));
  }
  // Graphs of 2-forms in the untwisted and twisted R3: Dirac iff d omega + eta = 0.
  std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> w1{{{1, 2}, R3->var(0)}};
  std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> w2{{{0, 1}, R3->var(2)}};
  std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> w3{{{0, 1}, -R3->var(2)}};
  std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> w4{{{0, 1}, R3->var(0) * R3->var(1)}};
  struct FormCase {
    std::string name;
    const CourantData* E;
    std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> w;
  };
  for (const auto& c : std::vector<FormCase>{{"form_xy_dxdy", &E30, w4},
                                             {"form_x_dydz", &E30, w1},
                                             {"form_minus_z_dxdy_twisted", &E3, w3},
                                             {"form_z_dxdy_twisted", &E3, w2}}) {
    auto dw = exterior_derivative(*R3, c.w);
    Polynomial total = R3->zero();
    if (auto it = dw.find({0, 1, 2}); it != dw.end()) total += it->second;
    if (auto it = c.E->eta.find({0, 1, 2}); it != c.E->eta.end()) total += it->second;
    bool closed = total.is_zero();
    bool dirac = check_dirac(graph_of_two_form(*c.E, c.w), {}).all_passed();
    r.add(verdict(c.name + ".closed", closed, "d omega + eta = " + R3->print(total)));
    r.add(verdict(c.name + ".dirac", dirac));
    r.add(verdict(c.name + ".agree", closed == dirac));
  }
  return r;
}

Report run_manin_triple(const ExampleOptions&) {
  Report r("manin-triple-Q-so3");
  auto so3 = so3_algebra();
  auto mt = q_manin_triple(so3);
  r.add_all(check_graded_lie(mt.algebra), "Q.");
  r.add_all(check_manin_triple(mt.algebra, mt.A, mt.B), "manin_triple.");
  for (const auto& L : {so3, sl2_algebra()}) {
    auto qd = qd_lagrangian_pair(L);
    r.add_all(check_manin_triple(qd.algebra, qd.A, qd.B), L.name + ".Qd_pair.");
    r.add_all(check_rhat_quasitriangular(L).report, L.name + ".rhat.");
  }
  return r;
}

Report run_gmt(const ExampleOptions&) {
  Report r("gen-manin-triple-double-sl2");
  auto T = double_generalized_manin_triple();
  r.add_all(check_generalized_manin_triple(T).report, "double.");
  auto D = degenerate_generalized_manin_triple();
  r.add_all(check_generalized_manin_triple(D).report, "degenerate_s.");
  auto C = T;
  C.k = {unit(6, 0), unit(6, 1), unit(6, 2)};
  r.add_all(check_generalized_manin_triple(C).report, "control.k_first_copy.");
  return r;
}

Report run_quadruple(const ExampleOptions&) {
  Report r("qp-group-quadruple-double");
  auto Q = double_quadruple();
  r.add_all(check_quadruple_round_trip(Q), "");
  // With h* the Lagrangian complement k, the form condition fails.
  auto Qk = Q;
  Qk.hstar = double_generalized_manin_triple().k;
  r.add_all(first_failure_only(check_qp_group_quadruple(Qk).report), "control.lagrangian_complement.");
  // The identity morphism diag(d) inside d + d-bar for (d, diag g).
  auto g = sl2_algebra();
  auto d = direct_sum(g, g, -1, "sl2+sl2bar");
  LinearManinMorphism I{d, d, {}, {}, {}};
  for (std::size_t i = 0; i < 3; ++i) I.A1.push_back(add(unit(6, i), unit(6, 3 + i)));
  I.A2 = I.A1;
  for (std::size_t i = 0; i < 6; ++i) I.K.push_back(add(unit(12, i), unit(12, 6 + i)));
  r.add_all(check_manin_pair_morphism_linear(I).report, "identity_morphism.");
  // K = A2 + A1 is Lagrangian but not a graph.
  LinearManinMorphism P = I;
  P.K.clear();
  for (const auto& a : I.A2) {
    Vector v = a;
    v.resize(12, Rational(0));
    P.K.push_back(v);
  }
  for (const auto& a : I.A1) {
    Vector v(6, Rational(0));
    v.insert(v.end(), a.begin(), a.end());
    P.K.push_back(v);
  }
  r.add_all(first_failure_only(check_manin_pair_morphism_linear(P).report), "control.product_of_subalgebras.");
  return r;
}

Report run_mutants(const ExampleOptions&) {
  Report r("cross-oracle-mutants");
  auto H = sl2_conjugation();
  auto twice = H;
  twice.space.pi = H.space.pi * Rational(2);
  r.add_all(check_cross_oracle("pi_doubled", cross_oracle(twice)), "");
  auto G = H.group;
  auto shifted = H;
  shifted.space.pi += wedge(left_field(G, 0, G.algebra.basis[1]), left_field(G, 0, G.algebra.basis[2]));
  r.add_all(check_cross_oracle("pi_plus_ef", cross_oracle(shifted)), "");
  auto y = sl2_conjugation("y");
  r.add_all(check_cross_oracle("fusion_without_psi", cross_oracle(fusion_product(H, y, false))), "");
  return r;
}

using E = ExpectedOutcome;
constexpr Status P = Status::pass;
constexpr Status F = Status::fail;

std::vector<ExampleFixture> make_registry() {
  return {
      {"abelian-r2", "abelian R^2: graded suite, translations of the plane with a constant Poisson bivector",
       {{"", P}},
       run_abelian},
      {"so3-trivial", "so(3) acting trivially and by rotations on R^3",
       {{"", P},
        {"rotations.coisotropic_stabilizers", F},
        {"rotations.coisotropic_stabilizers.rho_phi_zero", P}},
       run_so3},
      {"sl2-conjugation", "SL(2) with conjugation, pi_G and the identity moment map",
       {{"", P}, {"control.twist_wrong_scale", F}},
       run_conjugation},
      {"double-sl2", "the double (G, rho, 0) and D(G) with moment map (ab^-1, a^-1 b)",
       {{"", P}, {"control.coisotropic_stabilizers_plus_form", F}, {"control.quasi_symplectic_gbar", F}},
       run_double},
      {"amm-sl2", "the fused double over SL(2): source, target, groupoid laws, multiplicativity",
       {{"", P}, {"control.target_quasi_poisson", F}, {"coisotropy", P, true}, {"control.coisotropy_plus", F, true}},
       run_amm},
      {"fusion-sl2", "fusion of two conjugation spaces: algebroid, graded route, braiding",
       {{"", P},
        {"control.algebroid_without_correction", F},
        {"control.algebroid_without_correction.fused_differential_identity", P},
        {"crosscheck_without_cocycle.pi", F}},
       run_fusion},
      {"qp-bialgebra-sl2", "g over a point with rho = id and D = 0; T SL(2) with D = [pi_G, .]",
       {{"", P}, {"control.perturbed", F}},
       run_bialgebra},
      {"cartan-dirac-sl2", "the Cartan-Dirac structure in SL(2) x (sl2 + sl2-bar)",
       {{"", P}, {"axioms", P, true}},
       run_cartan_dirac},
      {"courant-standard", "standard Courant algebroids, tangent, cotangent and graph Dirac structures",
       {{"", P},
        {"control.R4.valid.eta_closed", F},
        {"control.R4.axioms", F},
        {"graph_cubic.schouten_zero", F},
        {"graph_cubic.dirac", F},
        {"form_x_dydz.closed", F},
        {"form_x_dydz.dirac", F},
        {"form_z_dxdy_twisted.closed", F},
        {"form_z_dxdy_twisted.dirac", F}},
       run_courant_standard},
      {"manin-triple-Q-so3", "the Manin triple of Q(so3) and the Lagrangian pairs of Q(d)",
       {{"", P}},
       run_manin_triple},
      {"gen-manin-triple-double-sl2", "a generalized Manin triple in sl2 + sl2-bar and a degenerate s",
       {{"", P},
        {"degenerate_s.transitive", F},
        {"degenerate_s.exact", F},
        {"control.k_first_copy", F},
        {"control.k_first_copy.exactness_criterion_agrees", P}},
       run_gmt},
      {"qp-group-quadruple-double", "quadruple to K to phi_K and back to rho",
       {{"", P}, {"control.product_of_subalgebras", F}, {"control.lagrangian_complement", F}},
       run_quadruple},
      {"cross-oracle-mutants", "three structures that must fail on both the chart and the graded route",
       {{"", P},
        {"pi_doubled.chart", F},
        {"pi_doubled.graded", F},
        {"pi_plus_ef.chart", F},
        {"pi_plus_ef.graded", F},
        {"fusion_without_psi.chart", F},
        {"fusion_without_psi.graded", F}},
       run_mutants},
  };
}

bool covers(const std::string& prefix, const std::string& name) {
  if (prefix.empty()) return true;
  return name == prefix || (name.size() > prefix.size() && name.compare(0, prefix.size(), prefix) == 0 &&
                            name[prefix.size()] == '.');
}

}  // namespace

const std::vector<ExampleFixture>& registry() {
  static const std::vector<ExampleFixture> r = make_registry();
  return r;
}

const ExampleFixture* find_example(const std::string& name) {
  for (const auto& fx : registry())
    if (fx.name == name) return &fx;
  return nullptr;
}

Report verify_example(const ExampleFixture& fx, const ExampleOptions& opts) {
  Report actual = fx.run(opts);
  // Each check belongs to the longest expected prefix covering it.
  std::vector<std::vector<const CheckResult*>> groups(fx.expected.size());
  for (const auto& c : actual.checks()) {
    long best = -1;
    for (std::size_t e = 0; e < fx.expected.size(); ++e)
      if (covers(fx.expected[e].prefix, c.name) &&
          (best < 0 || fx.expected[e].prefix.size() > fx.expected[static_cast<std::size_t>(best)].prefix.size()))
        best = static_cast<long>(e);
    if (best >= 0) groups[static_cast<std::size_t>(best)].push_back(&c);
  }
  Report out(fx.name);
  for (std::size_t e = 0; e < fx.expected.size(); ++e) {
    const auto& ex = fx.expected[e];
    std::string label = ex.prefix.empty() ? "checks" : ex.prefix;
    label += ex.status == Status::pass ? " pass" : " fail";
    const auto& g = groups[e];
    double ms = 0;
    for (const auto* c : g) ms += c->elapsed_ms;
    bool skipped = !g.empty();
    for (const auto* c : g) skipped = skipped && c->status == Status::skipped;
    if (ex.slow && !opts.run_slow) {
      out.add({label, Status::skipped, "slow check skipped", ms});
      continue;
    }
    if (g.empty()) {
      out.add({label, Status::fail, "no check ran under this name", ms});
      continue;
    }
    if (skipped) {
      out.add({label, Status::fail, "skipped unexpectedly", ms});
      continue;
    }
    CheckResult res{label, Status::pass, {}, ms};
    if (ex.status == Status::pass) {
      for (const auto* c : g)
        if (c->status == Status::inconclusive && res.status == Status::pass)
          res = {label, Status::inconclusive, c->name + ": " + c->witness, ms};
        else if (c->status == Status::fail)
          res = {label, Status::fail, c->name + ": " + c->witness, ms};
    } else {
      const CheckResult* failing = nullptr;
      for (const auto* c : g)
        if (c->status == Status::fail && !failing) failing = c;
      if (failing)
        res.witness = "fails as expected: " + failing->name + (failing->witness.empty() ? "" : ": " + failing->witness);
      else
        res = {label, Status::fail, "expected a failure, all " + std::to_string(g.size()) + " checks passed", ms};
    }
    out.add(res);
  }
  return out;
}

}  // namespace qpg
