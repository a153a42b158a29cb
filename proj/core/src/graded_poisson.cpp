#include "qpg/graded_poisson.hpp"

#include <stdexcept>

namespace qpg {

namespace {

GradedElement signed_elt(bool positive, const GradedElement& x) { return positive ? x : -x; }

bool shifted_even(int a, int b) { return ((a - 1) * (b - 1)) % 2 == 0; }

std::string pair_name(const GradedAlgebra& A, std::size_t i, std::size_t j) {
  return "{" + A.generator(i).name + ", " + A.generator(j).name + "}";
}

// sum_v (df/dx_v) {g, x_v}, without reducing f first.
GradedElement bracket_with_relation(const GradedAlgebra& A, std::size_t g, const Polynomial& f) {
  GradedElement v = A.zero();
  for (std::size_t k = 0; k < A.ring().nvars(); ++k) {
    Polynomial df = f.derivative(k);
    if (!df.is_zero()) v += A.table(g, A.gen_of_var(k)).times(df);
  }
  return v;
}

GradedElement word(const GradedAlgebra& A, std::vector<std::size_t> gens, const Rational& c) {
  GradedElement out = A.constant(c);
  for (auto g : gens) out = out * A.gen(g);
  return out;
}

GradedElement exterior_to_words(const GradedAlgebra& A, const std::vector<std::size_t>& xi,
                                const ExteriorElement& x) {
  GradedElement out = A.zero();
  for (const auto& [idx, c] : x.terms()) {
    std::vector<std::size_t> gens;
    for (auto i : idx) gens.push_back(xi[i]);
    out += word(A, gens, c);
  }
  return out;
}

GradedElement dual_xi(const GroupPresentation& P, const GradedAlgebra& A, const std::vector<std::size_t>& xi,
                      std::size_t i) {
  GradedElement out = A.zero();
  for (std::size_t j = 0; j < P.g.dim(); ++j)
    if (P.s(i, j) != 0) out += A.gen(xi[j]) * P.s(i, j);
  return out;
}

// mult^* images of the generators of P inside Q, given two inclusions of P into Q.
std::vector<GradedElement> mult_images(const GroupPresentation& P, const GradedAlgebra& Q,
                                       const std::vector<GradedElement>& inc1,
                                       const std::vector<GradedElement>& inc2, bool with_cocycle) {
  const auto& A = *P.algebra;
  std::vector<GradedElement> img(A.ngens(), Q.zero());
  GradedElement t = inc1[P.t] + inc2[P.t];
  if (with_cocycle)
    for (std::size_t i = 0; i < P.g.dim(); ++i) {
      GradedElement up = Q.zero();
      for (std::size_t j = 0; j < P.g.dim(); ++j)
        if (P.s(i, j) != 0) up += inc1[P.xi[j]] * P.s(i, j);
      t += up * inc2[P.xi[i]] * Rational(1, 2);
    }
  img[P.t] = t;
  for (auto x : P.xi) img[x] = inc1[x] + inc2[x];
  if (P.group) {
    const auto& G = *P.group;
    const std::size_t n = G.n();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        GradedElement v = Q.zero();
        for (std::size_t m = 0; m < n; ++m)
          v += inc1[A.gen_of_var(G.var(0, r, m))] * inc2[A.gen_of_var(G.var(0, m, c))];
        img[A.gen_of_var(G.var(0, r, c))] = v;
      }
  }
  return img;
}

}  // namespace

Report check_graded_poisson(const GradedAlgebra& P, bool check_relations) {
  Report r("graded_poisson");
  const std::size_t n = P.ngens();
  r.run("homogeneous", [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (int d : P.table(i, j).degrees())
          if (d != P.degree(i) + P.degree(j) - 1)
            return fail("homogeneous", pair_name(P, i, j) + " has degree " + std::to_string(d));
    return pass("homogeneous");
  });
  r.run("antisymmetric", [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto diff = P.table(i, j) + signed_elt(shifted_even(P.degree(i), P.degree(j)), P.table(j, i));
        if (!diff.is_zero()) return fail("antisymmetric", pair_name(P, i, j) + ": " + diff.to_string());
      }
    return pass("antisymmetric");
  });
  r.run("jacobi", [&] {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) {
          auto x = P.gen(a), y = P.gen(b), z = P.gen(c);
          auto lhs = bracket(x, bracket(y, z));
          auto rhs = bracket(bracket(x, y), z) +
                     signed_elt(shifted_even(P.degree(a), P.degree(b)), bracket(y, bracket(x, z)));
          if (!(lhs - rhs).is_zero())
            return fail("jacobi", "(" + P.generator(a).name + ", " + P.generator(b).name + ", " +
                                      P.generator(c).name + "): " + (lhs - rhs).to_string());
        }
    return pass("jacobi");
  });
  if (check_relations) {
    r.run("relations", [&] {
      for (const auto& f : P.ring().ideal_generators())
        for (std::size_t g = 0; g < n; ++g) {
          auto v = bracket_with_relation(P, g, f);
          if (!v.is_zero()) return fail("relations", "{" + P.generator(g).name + ", " + P.ring().print(f) + "} = " + v.to_string());
        }
      return pass("relations");
    });
  }
  return r;
}

GroupPresentation build_Gsmall(const LieAlgebraData& g, const Matrix& s) {
  std::vector<GradedGenerator> gens{{"t", 2}};
  for (const auto& b : g.basis) gens.push_back({b, 1});
  GroupPresentation P{GradedAlgebra::make(gens), g, s, 0, {}, std::nullopt};
  for (std::size_t i = 0; i < g.dim(); ++i) P.xi.push_back(1 + i);
  auto& A = *P.algebra;
  A.set_bracket(P.t, P.t, exterior_to_words(A, P.xi, cartan_trivector(g, s)));
  for (std::size_t i = 0; i < g.dim(); ++i) {
    A.set_bracket(P.t, P.xi[i], A.zero());
    for (std::size_t j = i; j < g.dim(); ++j)
      A.set_bracket(P.xi[i], P.xi[j], exterior_to_words(A, P.xi, ExteriorElement::from_vector(g.c[i][j])));
  }
  return P;
}

GroupPresentation build_Gbig(const MatrixGroupChart& G) {
  if (G.blocks.size() != 1) throw std::invalid_argument("G_big needs a single-block group");
  const auto& g = G.algebra.data;
  const std::size_t nv = G.ring->nvars();
  std::vector<GradedGenerator> gens;
  for (const auto& v : G.ring->vars()) gens.push_back({v, 0});
  gens.push_back({"t", 2});
  for (const auto& b : g.basis) gens.push_back({b, 1});
  GroupPresentation P{GradedAlgebra::make(gens, G.ring->ideal_generators(), G.ring->order()), g, g.s_tensor(), nv, {}, G};
  for (std::size_t i = 0; i < g.dim(); ++i) P.xi.push_back(nv + 1 + i);
  auto& A = *P.algebra;
  A.set_bracket(P.t, P.t, exterior_to_words(A, P.xi, cartan_trivector(g, P.s)));
  for (std::size_t i = 0; i < g.dim(); ++i) {
    A.set_bracket(P.t, P.xi[i], A.zero());
    for (std::size_t j = i; j < g.dim(); ++j)
      A.set_bracket(P.xi[i], P.xi[j], exterior_to_words(A, P.xi, ExteriorElement::from_vector(g.c[i][j])));
  }
  std::vector<std::vector<Polynomial>> b_comps, rho_comps;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const auto& e = G.algebra.basis[i];
    b_comps.push_back(b_field(G, 0, e).components());
    rho_comps.push_back((left_field(G, 0, e) - right_field(G, 0, e)).components());
  }
  for (std::size_t v = 0; v < nv; ++v) {
    GradedElement tf = A.zero();
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (!b_comps[i][v].is_zero()) tf += dual_xi(P, A, P.xi, i).times(b_comps[i][v]);
    A.set_bracket(P.t, v, tf);
    for (std::size_t i = 0; i < g.dim(); ++i) A.set_bracket(P.xi[i], v, A.scalar(rho_comps[i][v]));
  }
  return P;
}

GradedAlgebraPtr cotangent_presentation(const RingPtr& ring) {
  const std::size_t n = ring->nvars();
  std::vector<GradedGenerator> gens;
  for (const auto& v : ring->vars()) gens.push_back({v, 0});
  for (const auto& v : ring->vars()) gens.push_back({"d_" + v, 1});
  auto T = GradedAlgebra::make(gens, ring->ideal_generators(), ring->order());
  for (std::size_t i = 0; i < n; ++i) T->set_bracket(n + i, i, T->one());
  return T;
}

GradedElement to_graded(const MultivectorField& P, const GradedAlgebra& T) {
  const std::size_t n = T.ring().nvars();
  GradedElement out = T.zero();
  for (const auto& [idx, c] : P.terms()) {
    GradedElement::Word w;
    for (auto i : idx) w.push_back(static_cast<std::uint32_t>(n + i));
    out.add_term(w, c);
  }
  return out;
}

MultivectorField from_graded(const GradedElement& x, const RingPtr& ring) {
  const std::size_t n = ring->nvars();
  MultivectorField out(ring);
  for (const auto& [w, c] : x.terms()) {
    MultivectorField::Index idx;
    for (auto g : w) {
      if (g < n || g >= 2 * n) throw std::invalid_argument("element is not in the cotangent presentation");
      idx.push_back(static_cast<std::uint32_t>(g - n));
    }
    out.add_term(idx, c);
  }
  return out;
}

GradedElement GradedPoissonMap::pullback(const GradedElement& x) const { return qpg::pullback(images, x, *source); }

Report check_poisson_map(const GradedPoissonMap& F) {
  Report r("poisson_map");
  const auto& T = *F.target;
  const auto& S = *F.source;
  if (F.images.size() != T.ngens()) {
    r.add(fail("arity", "one image per target generator is required"));
    return r;
  }
  r.run("degrees", [&] {
    for (std::size_t i = 0; i < T.ngens(); ++i)
      for (int d : F.images[i].degrees())
        if (d != T.degree(i)) return fail("degrees", T.generator(i).name + " maps to degree " + std::to_string(d));
    return pass("degrees");
  });
  if (r.any_failed()) return r;
  r.run("relations", [&] {
    std::vector<Polynomial> coords;
    for (std::size_t v = 0; v < T.ring().nvars(); ++v) {
      const auto& img = F.images[T.gen_of_var(v)];
      coords.push_back(img.is_zero() ? S.ring().zero() : img.coefficient({}));
    }
    for (const auto& f : T.ring().ideal_generators()) {
      Polynomial v = S.ring().reduce(f.substitute(coords));
      if (!v.is_zero()) return fail("relations", T.ring().print(f) + " pulls back to " + S.ring().print(v));
    }
    return pass("relations");
  });
  r.run("brackets", [&] {
    for (std::size_t i = 0; i < T.ngens(); ++i)
      for (std::size_t j = i; j < T.ngens(); ++j) {
        auto lhs = F.pullback(T.table(i, j));
        auto rhs = bracket(F.images[i], F.images[j]);
        if (!(lhs - rhs).is_zero()) return fail("brackets", pair_name(T, i, j) + ": " + (lhs - rhs).to_string());
      }
    return pass("brackets");
  });
  return r;
}

GradedPoissonMap structure_map(const QPSpace& M, const GroupPresentation& P, const GradedAlgebraPtr& T) {
  if (P.group) throw std::invalid_argument("use the Hamiltonian structure map for G_big");
  GradedPoissonMap F{T, P.algebra, std::vector<GradedElement>(P.algebra->ngens(), T->zero())};
  F.images[P.t] = to_graded(M.pi, *T);
  for (std::size_t i = 0; i < P.g.dim(); ++i) F.images[P.xi[i]] = to_graded(M.action.rho.at(i), *T);
  return F;
}

GradedPoissonMap structure_map(const HamiltonianSpace& H, const GroupPresentation& P, const GradedAlgebraPtr& T) {
  if (!P.group) throw std::invalid_argument("G_small has no coordinates for a moment map");
  GradedPoissonMap F{T, P.algebra, std::vector<GradedElement>(P.algebra->ngens(), T->zero())};
  F.images[P.t] = to_graded(H.space.pi, *T);
  for (std::size_t i = 0; i < P.g.dim(); ++i) F.images[P.xi[i]] = to_graded(H.space.action.rho.at(i), *T);
  const auto& A = *P.algebra;
  if (H.moment.components.size() != A.ring().nvars()) throw std::invalid_argument("moment map arity mismatch");
  for (std::size_t v = 0; v < A.ring().nvars(); ++v) F.images[A.gen_of_var(v)] = T->scalar(H.moment.components[v]);
  return F;
}

Multiplication multiplication_pullback(const GroupPresentation& P, bool with_cocycle) {
  const auto& A = *P.algebra;
  auto PP = tensor_product({&A, &A}, {"_1", "_2"});
  auto inc1 = factor_inclusion(A, *PP, 0), inc2 = factor_inclusion(A, *PP, A.ngens());
  return {PP, GradedPoissonMap{PP, P.algebra, mult_images(P, *PP, inc1, inc2, with_cocycle)}};
}

Report check_multiplication(const GroupPresentation& P) {
  Report r("multiplication");
  auto m = multiplication_pullback(P);
  r.add_all(check_poisson_map(m.map), "poisson_lie.");
  r.run("coassociative", [&] {
    const auto& A = *P.algebra;
    const std::size_t n = A.ngens();
    auto T3 = tensor_product({&A, &A, &A}, {"_1", "_2", "_3"});
    auto i1 = factor_inclusion(A, *T3, 0), i2 = factor_inclusion(A, *T3, n), i3 = factor_inclusion(A, *T3, 2 * n);
    auto m12 = mult_images(P, *T3, i1, i2, true), m23 = mult_images(P, *T3, i2, i3, true);
    std::vector<GradedElement> left, right;  // images of the generators of P (x) P
    for (std::size_t g = 0; g < n; ++g) left.push_back(m12[g]);
    for (std::size_t g = 0; g < n; ++g) left.push_back(i3[g]);
    for (std::size_t g = 0; g < n; ++g) right.push_back(i1[g]);
    for (std::size_t g = 0; g < n; ++g) right.push_back(m23[g]);
    for (std::size_t g = 0; g < n; ++g) {
      auto l = pullback(left, m.map.images[g], *T3);
      auto rr = pullback(right, m.map.images[g], *T3);
      if (!(l - rr).is_zero()) return fail("coassociative", A.generator(g).name + ": " + (l - rr).to_string());
    }
    return pass("coassociative");
  });
  return r;
}

FusionCrosscheck fusion_crosscheck(const HamiltonianSpace& a, const HamiltonianSpace& b, bool with_cocycle) {
  FusionCrosscheck out{Report(with_cocycle ? "fusion_crosscheck" : "fusion_crosscheck_without_cocycle"), {}, {}, {}};
  auto fused = fusion_product(a, b);
  const RingPtr& ring = fused.space.ring();
  auto T = cotangent_presentation(ring);
  auto P = build_Gbig(a.group);
  auto m = multiplication_pullback(P, with_cocycle);

  // Structure maps of the factors, embedded in the product chart.
  auto pa = product(a, b);
  const std::size_t na = a.space.ring()->nvars(), total = ring->nvars();
  const std::size_t gdim = P.g.dim();
  std::vector<GradedElement> factor_images;
  auto add_factor = [&](const HamiltonianSpace& H, std::size_t offset, std::size_t block) {
    const auto& A = *P.algebra;
    std::vector<GradedElement> img(A.ngens(), T->zero());
    img[P.t] = to_graded(H.space.pi.embed(ring, offset), *T);
    for (std::size_t i = 0; i < gdim; ++i) img[P.xi[i]] = to_graded(pa.space.action.rho.at(block * gdim + i), *T);
    for (std::size_t v = 0; v < A.ring().nvars(); ++v)
      img[A.gen_of_var(v)] = T->scalar(H.moment.components[v].embed(total, offset));
    factor_images.insert(factor_images.end(), img.begin(), img.end());
  };
  add_factor(a, 0, 0);
  add_factor(b, na, 1);

  std::vector<GradedElement> composed;
  for (const auto& img : m.map.images) composed.push_back(pullback(factor_images, img, *T));

  out.pi_graded = from_graded(composed[P.t], ring);
  out.residue = fused.space.pi - out.pi_graded;
  ExteriorElement psi(2 * gdim);
  for (std::size_t i = 0; i < gdim; ++i)
    for (std::size_t j = 0; j < gdim; ++j)
      if (P.s(i, j) != 0) psi.add_wedge({static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(gdim + i)}, P.s(i, j) / 2);
  out.rho_psi = rho_of(pa.space.action, psi);

  out.report.add(verdict("pi", out.residue.is_zero(), "chart minus graded: " + out.residue.to_string()));
  out.report.run("action", [&] {
    for (std::size_t i = 0; i < gdim; ++i) {
      auto diff = fused.space.action.rho.at(i) - from_graded(composed[P.xi[i]], ring);
      if (!diff.is_zero()) return fail("action", P.g.basis[i] + ": " + diff.to_string());
    }
    return pass("action");
  });
  out.report.run("moment", [&] {
    const auto& A = *P.algebra;
    for (std::size_t v = 0; v < A.ring().nvars(); ++v) {
      const auto& img = composed[A.gen_of_var(v)];
      Polynomial g = img.is_zero() ? ring->zero() : img.coefficient({});
      Polynomial diff = ring->reduce(fused.moment.components[v] - g);
      if (!diff.is_zero()) return fail("moment", A.ring().vars()[v] + ": " + ring->print(diff));
    }
    return pass("moment");
  });
  if (!with_cocycle)
    out.report.add(verdict("residue_is_rho_psi", (out.residue - out.rho_psi).is_zero(),
                           "residue minus rho(psi): " + (out.residue - out.rho_psi).to_string()));
  return out;
}

}  // namespace qpg
