#include "qpg/bialgebroid.hpp"

#include <stdexcept>

namespace qpg {

namespace {

bool same(const GradedElement& a, const GradedElement& b) { return (a - b).is_zero(); }

int shifted_sign(int a, int b) { return ((a - 1) * (b - 1)) % 2 == 0 ? 1 : -1; }

Matrix s_of(const LieAlgebraData& g) {
  if (g.form) return g.s_tensor();
  return Matrix(g.dim(), g.dim());
}

GradedElement signed_elt(int sign, const GradedElement& x) { return sign > 0 ? x : -x; }

}  // namespace

GradedElement LieAlgebroidFrame::function(const Polynomial& f) const { return algebra->scalar(f); }

LieAlgebroidFrame make_algebroid(std::string name, RingPtr ring, std::vector<MultivectorField> anchor,
                                 std::vector<std::vector<std::vector<Polynomial>>> c,
                                 std::vector<std::string> section_names) {
  const std::size_t r = anchor.size();
  if (section_names.empty())
    for (std::size_t i = 0; i < r; ++i) section_names.push_back("a" + std::to_string(i));
  if (section_names.size() != r || c.size() != r) throw std::invalid_argument("algebroid rank mismatch");
  std::vector<GradedGenerator> gens;
  for (const auto& v : ring->vars()) gens.push_back({v, 0});
  for (const auto& s : section_names) gens.push_back({s, 1});
  LieAlgebroidFrame A{std::move(name), ring, std::move(anchor), std::move(c), nullptr};
  A.algebra = GradedAlgebra::make(gens, ring->ideal_generators(), ring->order());
  const std::size_t n = ring->nvars();
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      GradedElement v = A.algebra->zero();
      for (std::size_t k = 0; k < r; ++k)
        if (!A.c[i][j][k].is_zero()) v += A.algebra->gen(n + k).times(A.c[i][j][k]);
      A.algebra->set_bracket(n + i, n + j, v);
    }
    auto comps = A.anchor[i].components();
    for (std::size_t v = 0; v < n; ++v) A.algebra->set_bracket(n + i, v, A.algebra->scalar(comps[v]));
  }
  return A;
}

LieAlgebroidFrame algebra_over_point(const LieAlgebraData& g) {
  auto ring = CoordinateRing::make({});
  std::vector<MultivectorField> anchor(g.dim(), MultivectorField(ring));
  std::vector<std::vector<std::vector<Polynomial>>> c(g.dim(), std::vector<std::vector<Polynomial>>(g.dim()));
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k) c[i][j].push_back(ring->constant(g.c[i][j][k]));
  return make_algebroid(g.name, ring, anchor, c, g.basis);
}

LieAlgebroidFrame tangent_algebroid(std::string name, RingPtr ring, std::vector<MultivectorField> frame,
                                    const LieAlgebraData& constants) {
  const std::size_t r = frame.size();
  if (constants.dim() != r) throw std::invalid_argument("frame size differs from the constants' dimension");
  std::vector<std::vector<std::vector<Polynomial>>> c(r, std::vector<std::vector<Polynomial>>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k) c[i][j].push_back(ring->constant(constants.c[i][j][k]));
  return make_algebroid(std::move(name), ring, std::move(frame), std::move(c), constants.basis);
}

Report check_algebroid(const LieAlgebroidFrame& A) {
  Report r("algebroid:" + A.name);
  const auto& alg = *A.algebra;
  r.run("anchor_tangent", [&] {
    for (std::size_t i = 0; i < A.rank(); ++i)
      if (auto w = ideal_violation(A.anchor[i])) return fail("anchor_tangent", A.algebra->generator(A.section_gen(i)).name + ": " + *w);
    return pass("anchor_tangent");
  });
  r.run("jacobi", [&] {
    for (std::size_t a = 0; a < alg.ngens(); ++a)
      for (std::size_t b = 0; b < alg.ngens(); ++b)
        for (std::size_t c = 0; c < alg.ngens(); ++c) {
          if (alg.degree(a) + alg.degree(b) + alg.degree(c) < 2) continue;
          auto x = alg.gen(a), y = alg.gen(b), z = alg.gen(c);
          auto lhs = bracket(x, bracket(y, z));
          auto rhs = bracket(bracket(x, y), z) +
                     signed_elt(shifted_sign(alg.degree(a), alg.degree(b)), bracket(y, bracket(x, z)));
          if (!same(lhs, rhs))
            return fail("jacobi", "(" + alg.generator(a).name + ", " + alg.generator(b).name + ", " +
                                      alg.generator(c).name + "): " + (lhs - rhs).to_string());
        }
    return pass("jacobi");
  });
  r.run("anchor_compatible", [&] {
    for (std::size_t i = 0; i < A.rank(); ++i)
      for (std::size_t j = 0; j < A.rank(); ++j) {
        MultivectorField rhs(A.ring);
        for (std::size_t k = 0; k < A.rank(); ++k) rhs += A.anchor[k].times(A.c[i][j][k]);
        auto diff = schouten(A.anchor[i], A.anchor[j]) - rhs;
        if (!diff.is_zero()) return fail("anchor_compatible", "[a(" + std::to_string(i) + "), a(" + std::to_string(j) + ")]: " + diff.to_string());
      }
    return pass("anchor_compatible");
  });
  return r;
}

MultivectorField to_multivector(const LieAlgebroidFrame& A, const GradedElement& x) {
  MultivectorField out(A.ring);
  const std::size_t n = A.ring->nvars();
  for (const auto& [w, c] : x.terms()) {
    MultivectorField term = MultivectorField::function(A.ring, c);
    for (auto g : w) term = wedge(term, A.anchor.at(g - n));
    out += term;
  }
  return out;
}

GradedElement from_multivector(const LieAlgebroidFrame& A, const std::vector<OneForm>& coframe,
                               const MultivectorField& P) {
  GradedElement out = A.algebra->zero();
  MultivectorField part1(A.ring), part2(A.ring);
  for (const auto& [idx, c] : P.terms()) {
    if (idx.empty()) {
      out += A.function(c);
    } else if (idx.size() == 1) {
      part1.add_term(idx, c);
    } else if (idx.size() == 2) {
      part2.add_term(idx, c);
    } else {
      throw std::invalid_argument("frame expansion supports degrees up to 2");
    }
  }
  for (std::size_t i = 0; i < A.rank(); ++i) {
    if (!part1.is_zero()) out += A.section(i).times(contract(coframe[i], part1));
    if (!part2.is_zero())
      for (std::size_t j = i + 1; j < A.rank(); ++j)
        out += (A.section(i) * A.section(j)).times(evaluate_bivector(part2, coframe[i], coframe[j]));
  }
  return out;
}

GradedElement apply_D(const QPBialgebroid& B, const GradedElement& x) { return apply_derivation(B.D, 1, x); }

GradedElement rho_of(const QPBialgebroid& B, const ExteriorElement& x) {
  GradedElement out = B.A.algebra->zero();
  for (const auto& [idx, c] : x.terms()) {
    GradedElement term = B.A.algebra->constant(c);
    for (auto i : idx) term = term * B.rho.at(i);
    out += term;
  }
  return out;
}

DerivationRules hamiltonian_rules(const LieAlgebroidFrame& A, const GradedElement& P) {
  DerivationRules rules(A.algebra->ngens());
  for (std::size_t g = 0; g < rules.size(); ++g) rules[g] = bracket(P, A.algebra->gen(g));
  return rules;
}

Report check_qp_bialgebroid(const QPBialgebroid& B) {
  Report r("qp_bialgebroid:" + B.A.name);
  const auto& alg = *B.A.algebra;
  r.add_all(check_algebroid(B.A), "algebroid.");
  if (B.rho.size() != B.g.dim() || B.D.size() != alg.ngens()) {
    r.add(fail("arity", "rho or D does not match the algebra and the frame"));
    return r;
  }
  r.run("rho_morphism", [&] {
    for (std::size_t i = 0; i < B.g.dim(); ++i)
      for (std::size_t j = i + 1; j < B.g.dim(); ++j) {
        auto diff = bracket(B.rho[i], B.rho[j]) - rho_of(B, ExteriorElement::from_vector(B.g.c[i][j]));
        if (!diff.is_zero())
          return fail("rho_morphism", "[rho(" + B.g.basis[i] + "), rho(" + B.g.basis[j] + ")]: " + diff.to_string());
      }
    return pass("rho_morphism");
  });
  r.run("D_degree", [&] {
    for (std::size_t g = 0; g < alg.ngens(); ++g) {
      const auto& d = B.D[g];
      if (!d) return fail("D_degree", "no rule for " + alg.generator(g).name);
      for (int deg : d->degrees())
        if (deg != alg.degree(g) + 1) return fail("D_degree", "D(" + alg.generator(g).name + ") has degree " + std::to_string(deg));
    }
    return pass("D_degree");
  });
  if (r.any_failed()) return r;
  r.run("D_preserves_relations", [&] {
    const auto& ring = alg.ring();
    for (const auto& f : ring.ideal_generators()) {
      GradedElement v = alg.zero();
      for (std::size_t k = 0; k < ring.nvars(); ++k) v += B.D[alg.gen_of_var(k)]->times(f.derivative(k));
      if (!v.is_zero()) return fail("D_preserves_relations", "D(" + ring.print(f) + ") = " + v.to_string());
    }
    return pass("D_preserves_relations");
  });
  r.run("D_derivation_of_bracket", [&] {
    for (std::size_t a = 0; a < alg.ngens(); ++a)
      for (std::size_t b = 0; b < alg.ngens(); ++b) {
        auto x = alg.gen(a), y = alg.gen(b);
        auto lhs = apply_D(B, bracket(x, y));
        auto rhs = bracket(apply_D(B, x), y) + signed_elt(alg.degree(a) % 2 == 1 ? 1 : -1, bracket(x, apply_D(B, y)));
        if (!same(lhs, rhs))
          return fail("D_derivation_of_bracket", "(" + alg.generator(a).name + ", " + alg.generator(b).name + "): " + (lhs - rhs).to_string());
      }
    return pass("D_derivation_of_bracket");
  });
  r.run("D_rho_zero", [&] {
    for (std::size_t i = 0; i < B.g.dim(); ++i) {
      auto v = apply_D(B, B.rho[i]);
      if (!v.is_zero()) return fail("D_rho_zero", "D rho(" + B.g.basis[i] + ") = " + v.to_string());
    }
    return pass("D_rho_zero");
  });
  r.run("D_squared", [&] {
    auto rphi = rho_of(B, cartan_trivector(B.g, s_of(B.g)));
    for (std::size_t g = 0; g < alg.ngens(); ++g) {
      auto x = alg.gen(g);
      auto diff = apply_D(B, apply_D(B, x)) - bracket(rphi, x) * Rational(1, 2);
      if (!diff.is_zero()) return fail("D_squared", "D^2 - 1/2 [rho(phi), .] on " + alg.generator(g).name + ": " + diff.to_string());
    }
    return pass("D_squared");
  });
  return r;
}

GradedElement dual_differential(const QPBialgebroid& B, const GradedElement& x) {
  const auto& alg = *B.A.algebra;
  Matrix s = s_of(B.g);
  DerivationRules rules(alg.ngens());
  std::vector<GradedElement> rho_dual;
  for (std::size_t i = 0; i < B.g.dim(); ++i) rho_dual.push_back(rho_of(B, ExteriorElement::from_vector(s.row(i))));
  for (std::size_t g = 0; g < alg.ngens(); ++g) {
    GradedElement v = *B.D[g];
    auto y = alg.gen(g);
    for (std::size_t i = 0; i < B.g.dim(); ++i) v += rho_dual[i] * bracket(B.rho[i], y) * Rational(1, 2);
    rules[g] = v;
  }
  return apply_derivation(rules, 1, x);
}

MultivectorField induced_bivector(const QPBialgebroid& B) {
  const auto& A = B.A;
  const std::size_t n = A.ring->nvars();
  MultivectorField pi(A.ring);
  std::vector<std::vector<Polynomial>> anchor_comps;
  for (const auto& X : A.anchor) anchor_comps.push_back(X.components());
  for (std::size_t l = 0; l < n; ++l) {
    auto Dx = apply_D(B, A.algebra->gen(A.algebra->gen_of_var(l)));
    for (std::size_t k = 0; k < l; ++k) {
      Polynomial v = A.ring->zero();
      for (const auto& [w, c] : Dx.terms()) v += c * anchor_comps[w.at(0) - n][k];
      if (!v.is_zero()) pi.add_term({static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(l)}, v);
    }
  }
  return pi;
}

GAction induced_action(const QPBialgebroid& B) {
  GAction act{B.g, {}};
  for (const auto& x : B.rho) act.rho.push_back(to_multivector(B.A, x));
  return act;
}

Report check_dual_differential(const QPBialgebroid& B, const std::vector<MultivectorField>& frame) {
  Report r("dual_differential:" + B.A.name);
  const auto& alg = *B.A.algebra;
  r.run("d_squared_zero", [&] {
    for (std::size_t g = 0; g < alg.ngens(); ++g) {
      auto v = dual_differential(B, dual_differential(B, alg.gen(g)));
      if (!v.is_zero()) return fail("d_squared_zero", "d^2 " + alg.generator(g).name + " = " + v.to_string());
    }
    return pass("d_squared_zero");
  });
  r.run("mu_rho_chain_map", [&] {
    Matrix s = s_of(B.g);
    std::vector<GradedElement> rd;
    for (std::size_t i = 0; i < B.g.dim(); ++i) rd.push_back(rho_of(B, ExteriorElement::from_vector(s.row(i))));
    for (std::size_t k = 0; k < B.g.dim(); ++k) {
      GradedElement rhs = alg.zero();
      for (std::size_t i = 0; i < B.g.dim(); ++i)
        for (std::size_t j = 0; j < B.g.dim(); ++j)
          if (B.g.c[i][j][k] != 0) rhs += rd[i] * rd[j] * (Rational(-1, 2) * B.g.c[i][j][k]);
      auto diff = dual_differential(B, rd[k]) - rhs;
      if (!diff.is_zero()) return fail("mu_rho_chain_map", "on " + B.g.basis[k] + ": " + diff.to_string());
    }
    return pass("mu_rho_chain_map");
  });
  auto M = make_space(B.A.name + "-induced", induced_action(B), induced_bivector(B), frame);
  M.s = s_of(B.g);
  r.add_all(check_quasi_poisson(M), "induced.");
  return r;
}

Report compare_with_cotangent(const QPBialgebroid& B, const QPSpace& M) {
  Report r("cotangent_comparison:" + B.A.name);
  const auto& A = B.A;
  r.run("coordinates", [&] {
    for (std::size_t v = 0; v < A.ring->nvars(); ++v) {
      auto lhs = to_multivector(A, dual_differential(B, A.algebra->gen(A.algebra->gen_of_var(v))));
      auto rhs = cotangent_differential(M, MultivectorField::function(M.ring(), M.ring()->var(v)), 1);
      if (!(lhs - rhs).is_zero()) return fail("coordinates", A.ring->vars()[v] + ": " + (lhs - rhs).to_string());
    }
    return pass("coordinates");
  });
  r.run("frame_sections", [&] {
    for (std::size_t i = 0; i < A.rank(); ++i) {
      auto lhs = to_multivector(A, dual_differential(B, A.section(i)));
      auto rhs = cotangent_differential(M, A.anchor[i], 1);
      if (!(lhs - rhs).is_zero()) return fail("frame_sections", A.algebra->generator(A.section_gen(i)).name + ": " + (lhs - rhs).to_string());
    }
    return pass("frame_sections");
  });
  return r;
}

}  // namespace qpg
