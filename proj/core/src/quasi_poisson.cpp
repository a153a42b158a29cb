#include "qpg/quasi_poisson.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

namespace qpg {

namespace {

CheckResult equal_fields(const std::string& name, const std::string& label, const MultivectorField& lhs,
                         const MultivectorField& rhs) {
  auto diff = lhs - rhs;
  if (diff.is_zero()) return pass(name);
  return fail(name, label + ": residue " + diff.to_string());
}

std::vector<Rational> evaluate_field(const MultivectorField& X, const std::vector<Rational>& point) {
  std::vector<Rational> out(X.ring()->nvars());
  for (const auto& [idx, c] : X.terms()) out[idx.at(0)] = c.evaluate(point);
  return out;
}

OneForm coordinate_form(const CoordinateRing& ring, std::size_t k) {
  OneForm dk(ring.nvars(), ring.zero());
  dk[k] = ring.one();
  return dk;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

std::string point_string(const std::vector<Rational>& p) { return to_string(Vector(p)); }

std::size_t variety_dimension(const CoordinateRing& ring, const std::vector<Rational>& point) {
  const auto& gens = ring.ideal_generators();
  if (gens.empty()) return ring.nvars();
  Matrix J(gens.size(), ring.nvars());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t k = 0; k < ring.nvars(); ++k) J(i, k) = gens[i].derivative(k).evaluate(point);
  return ring.nvars() - rank(J);
}

Matrix evaluate_matrix(const PolyMatrix& m, const std::vector<Rational>& point) {
  Matrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = m[i][j].evaluate(point);
  return out;
}

Polynomial determinant_poly(const CoordinateRing& ring, const PolyMatrix& m) {
  std::size_t n = m.size();
  std::map<std::uint64_t, Polynomial> memo;
  // Minor on rows [n - popcount(cols), n) and the column set `cols`.
  std::function<Polynomial(std::uint64_t)> minor = [&](std::uint64_t cols) -> Polynomial {
    if (cols == 0) return ring.one();
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    std::size_t k = static_cast<std::size_t>(__builtin_popcountll(cols));
    std::size_t row = n - k;
    Polynomial sum = ring.zero();
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1ULL << c))) continue;
      if (!m[row][c].is_zero()) {
        Polynomial t = m[row][c] * minor(cols & ~(1ULL << c));
        if (sign > 0)
          sum += t;
        else
          sum -= t;
      }
      sign = -sign;
    }
    sum = ring.reduce(sum);
    memo.emplace(cols, sum);
    return sum;
  };
  return minor(n == 64 ? ~0ULL : ((1ULL << n) - 1));
}

MultivectorField j_star(const MultivectorField& P, const std::vector<MultivectorField>& images) {
  MultivectorField out(P.ring());
  for (const auto& [idx, c] : P.terms()) {
    MultivectorField t = MultivectorField::function(P.ring(), c);
    for (auto i : idx) t = wedge(t, images[i]);
    out += t;
  }
  return out;
}

}  // namespace

QPSpace make_space(std::string name, GAction action, MultivectorField pi, std::vector<MultivectorField> frame) {
  QPSpace M;
  M.name = std::move(name);
  M.s = action.algebra.form ? action.algebra.s_tensor() : Matrix(action.algebra.dim(), action.algebra.dim());
  M.action = std::move(action);
  if (frame.empty()) frame = coordinate_frame(pi.ring());
  M.pi = std::move(pi);
  M.frame = std::move(frame);
  return M;
}

std::vector<MultivectorField> dual_fields(const QPSpace& M) {
  std::vector<MultivectorField> out;
  for (std::size_t i = 0; i < M.algebra().dim(); ++i) out.push_back(rho_of(M.action, M.s.row(i)));
  return out;
}

MultivectorField rho_phi(const QPSpace& M) { return rho_of(M.action, cartan_trivector(M.algebra(), M.s)); }

Report check_quasi_poisson(const QPSpace& M) {
  Report r("quasi_poisson:" + M.name);
  r.add_all(check_action(M.action), "action.");
  r.run("pi_bivector", [&] {
    for (auto d : M.pi.degrees())
      if (d != 2) return fail("pi_bivector", "pi has a component of degree " + std::to_string(d));
    return pass("pi_bivector");
  });
  r.run("pi_tangent", [&] {
    auto w = ideal_violation(M.pi);
    return verdict("pi_tangent", !w, w.value_or(""));
  });
  r.run("pi_pi_equals_rho_phi", [&] {
    return equal_fields("pi_pi_equals_rho_phi", "[pi,pi] - rho(phi)", schouten(M.pi, M.pi), rho_phi(M));
  });
  r.run("pi_invariant", [&] {
    for (std::size_t i = 0; i < M.algebra().dim(); ++i) {
      auto c = schouten(M.pi, M.action.rho[i]);
      if (!c.is_zero()) return fail("pi_invariant", "[pi, rho(" + M.algebra().basis[i] + ")] = " + c.to_string());
    }
    return pass("pi_invariant");
  });
  return r;
}

CoisotropicResult check_coisotropic_stabilizers(const GAction& act, const Matrix& s,
                                                const std::vector<std::vector<Rational>>& points) {
  CoisotropicResult out;
  out.report = Report("coisotropic_stabilizers");
  std::size_t d = act.algebra.dim();
  auto rphi = rho_of(act, cartan_trivector(act.algebra, s));
  out.generic = rphi.is_zero();
  out.report.add(verdict("rho_phi_zero", out.generic, "rho(phi) = " + rphi.to_string()));
  const auto& ring = *act.rho.at(0).ring();
  for (std::size_t p = 0; p < points.size(); ++p) {
    const auto& x = points[p];
    std::string name = "pointwise[" + std::to_string(p) + "]";
    if (!ring.contains_point(x)) {
      out.pointwise.push_back(false);
      out.report.add(fail(name, "point " + point_string(x) + " is not on the variety"));
      continue;
    }
    Matrix R(ring.nvars(), d);
    for (std::size_t i = 0; i < d; ++i) {
      auto v = evaluate_field(act.rho[i], x);
      for (std::size_t k = 0; k < ring.nvars(); ++k) R(k, i) = v[k];
    }
    auto stab = nullspace(R);
    auto annihilator = nullspace(Matrix::from_rows(stab, d));
    if (stab.empty()) annihilator = Matrix::identity(d).row_vectors();
    bool ok = true;
    std::string witness;
    for (const auto& alpha : annihilator) {
      Vector v = s.apply(alpha);
      if (!is_zero(R.apply(v))) {
        ok = false;
        witness = "s#(" + to_string(alpha) + ") = " + to_string(v) + " is not in the stabilizer";
        break;
      }
    }
    out.pointwise.push_back(ok);
    out.report.add(verdict(name, ok, witness));
  }
  return out;
}

MultivectorField cotangent_differential(const QPSpace& M, const MultivectorField& P, int pi_sign) {
  MultivectorField out = schouten(M.pi, P) * Rational(pi_sign);
  auto duals = dual_fields(M);
  for (std::size_t i = 0; i < M.algebra().dim(); ++i) {
    if (duals[i].is_zero()) continue;
    auto b = schouten(M.action.rho[i], P);
    if (!b.is_zero()) out += wedge(duals[i], b) * Rational(1, 2);
  }
  return out;
}

Report check_cotangent_differential(const QPSpace& M, int pi_sign) {
  Report r("cotangent_differential:" + M.name);
  auto fam = generator_family(M.ring(), M.frame);
  auto gens = fam.all();
  r.run("d_squared_zero", [&] {
    for (std::size_t g = 0; g < gens.size(); ++g) {
      auto dd = cotangent_differential(M, cotangent_differential(M, gens[g], pi_sign), pi_sign);
      if (!dd.is_zero()) return fail("d_squared_zero", "d^2(" + fam.names[g] + ") = " + dd.to_string());
    }
    return pass("d_squared_zero");
  });
  r.run("equivariant", [&] {
    for (std::size_t i = 0; i < M.algebra().dim(); ++i)
      for (std::size_t g = 0; g < gens.size(); ++g) {
        const auto& X = M.action.rho[i];
        auto lhs = schouten(X, cotangent_differential(M, gens[g], pi_sign));
        auto rhs = cotangent_differential(M, schouten(X, gens[g]), pi_sign);
        if (!(lhs == rhs))
          return fail("equivariant", "[L_rho(" + M.algebra().basis[i] + "), d](" + fam.names[g] +
                                         ") = " + (lhs - rhs).to_string());
      }
    return pass("equivariant");
  });
  return r;
}

MultivectorField anchor(const QPSpace& M, const OneForm& alpha) {
  MultivectorField out = sharp(M.pi, alpha);
  auto duals = dual_fields(M);
  for (std::size_t i = 0; i < M.algebra().dim(); ++i) {
    Polynomial c = contract(alpha, M.action.rho[i]);
    if (!c.is_zero()) out += duals[i].times(c) * Rational(1, 2);
  }
  return out;
}

PolyMatrix anchor_matrix(const QPSpace& M) {
  const auto& ring = *M.ring();
  std::size_t n = ring.nvars();
  PolyMatrix A(n, std::vector<Polynomial>(n, ring.zero()));
  for (std::size_t j = 0; j < n; ++j) {
    auto col = anchor(M, coordinate_form(ring, j));
    for (const auto& [idx, c] : col.terms()) A[idx.at(0)][j] = c;
  }
  return A;
}

OneForm oneform_bracket(const QPSpace& M, const OneForm& alpha, const OneForm& beta) {
  const auto& ring = *M.ring();
  std::size_t n = ring.nvars();
  auto duals = dual_fields(M);
  std::size_t d = M.algebra().dim();
  std::vector<std::vector<Polynomial>> rho_x(d), dual_x(d);
  for (std::size_t i = 0; i < d; ++i) {
    rho_x[i] = M.action.rho[i].components();
    dual_x[i] = duals[i].components();
  }
  std::vector<MultivectorField> anchors;
  for (std::size_t k = 0; k < n; ++k) anchors.push_back(anchor(M, coordinate_form(ring, k)));

  OneForm out(n, ring.zero());
  for (std::size_t k = 0; k < n; ++k) {
    if (alpha[k].is_zero()) continue;
    for (std::size_t l = 0; l < n; ++l) {
      if (beta[l].is_zero()) continue;
      // [dx_k, dx_l]
      Polynomial coef = ring.reduce(alpha[k] * beta[l]);
      if (coef.is_zero()) continue;
      Polynomial p = evaluate_bivector(M.pi, coordinate_form(ring, k), coordinate_form(ring, l));
      OneForm br = oneform_scale(differential(ring, p), ring.constant(-1));
      for (std::size_t i = 0; i < d; ++i) {
        if (dual_x[i][k].is_zero() && dual_x[i][l].is_zero()) continue;
        br = oneform_add(br, oneform_scale(differential(ring, rho_x[i][l]), dual_x[i][k] * Rational(1, 2)));
        br = oneform_add(br, oneform_scale(differential(ring, rho_x[i][k]), dual_x[i][l] * Rational(-1, 2)));
      }
      out = oneform_add(out, oneform_scale(br, coef));
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!alpha[k].is_zero())
      for (std::size_t l = 0; l < n; ++l) out[l] += alpha[k] * apply_field(anchors[k], beta[l]);
    if (!beta[k].is_zero())
      for (std::size_t l = 0; l < n; ++l) out[l] -= beta[k] * apply_field(anchors[k], alpha[l]);
  }
  for (auto& c : out) c = ring.reduce(c);
  return out;
}

bool oneforms_equal(const QPSpace& M, const OneForm& a, const OneForm& b) {
  OneForm diff = a;
  for (std::size_t k = 0; k < diff.size(); ++k) diff[k] -= b[k];
  for (const auto& X : M.frame)
    if (!contract(diff, X).is_zero()) return false;
  return true;
}

Report check_bracket_anchor(const QPSpace& M) {
  Report r("bracket_anchor:" + M.name);
  const auto& ring = *M.ring();
  std::size_t n = ring.nvars();
  auto A = anchor_matrix(M);
  r.run("anchor_from_differential", [&] {
    for (std::size_t k = 0; k < n; ++k) {
      auto D = cotangent_differential(M, MultivectorField::function(M.ring(), ring.var(k)), -1);
      auto want = MultivectorField::vector_field(M.ring(), A[k]);
      if (!(D == want))
        return fail("anchor_from_differential", "d x_" + ring.vars()[k] + " - a^*(dx) = " + (D - want).to_string());
    }
    return pass("anchor_from_differential");
  });
  r.run("bracket_from_differential", [&] {
    std::vector<MultivectorField> anchors;
    for (std::size_t k = 0; k < n; ++k) anchors.push_back(anchor(M, coordinate_form(ring, k)));
    for (std::size_t f = 0; f < M.frame.size(); ++f) {
      const auto& X = M.frame[f];
      auto DX = cotangent_differential(M, X, -1);
      auto Xc = X.components();
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          auto br = oneform_bracket(M, coordinate_form(ring, k), coordinate_form(ring, l));
          Polynomial lhs = contract(br, X);
          Polynomial rhs = apply_field(anchors[k], Xc[l]) - apply_field(anchors[l], Xc[k]) -
                           evaluate_bivector(DX, coordinate_form(ring, k), coordinate_form(ring, l));
          Polynomial res = ring.reduce(lhs - rhs);
          if (!res.is_zero())
            return fail("bracket_from_differential", "frame field " + std::to_string(f) + ", pair (" +
                                                         ring.vars()[k] + "," + ring.vars()[l] +
                                                         "): residue " + ring.print(res));
        }
    }
    return pass("bracket_from_differential");
  });
  return r;
}

std::pair<std::size_t, std::size_t> anchor_rank_at(const QPSpace& M, const std::vector<Rational>& point) {
  auto A = evaluate_matrix(anchor_matrix(M), point);
  return {rank(A), variety_dimension(*M.ring(), point)};
}

QuasiSymplecticResult check_quasi_symplectic(const QPSpace& M, const std::vector<std::vector<Rational>>& points) {
  QuasiSymplecticResult out;
  out.report = Report("quasi_symplectic:" + M.name);
  const auto& ring = *M.ring();
  auto A = anchor_matrix(M);
  std::optional<std::size_t> full_point;
  for (std::size_t p = 0; p < points.size(); ++p) {
    std::string name = "pointwise[" + std::to_string(p) + "]";
    if (points[p].size() != ring.nvars() || !ring.contains_point(points[p])) {
      out.pointwise.push_back(false);
      out.report.add(fail(name, "point " + point_string(points[p]) + " is not on the variety"));
      continue;
    }
    std::size_t rk = rank(evaluate_matrix(A, points[p]));
    std::size_t dim = variety_dimension(ring, points[p]);
    bool ok = rk == dim;
    if (ok && !full_point) full_point = p;
    out.pointwise.push_back(ok);
    out.report.add(verdict(name, ok,
                           "anchor rank " + std::to_string(rk) + " < dimension " + std::to_string(dim) + " at " +
                               point_string(points[p])));
  }
  if (!ring.has_ideal()) {
    Polynomial det = determinant_poly(ring, A);
    out.generic = det.is_zero() ? Status::fail : Status::pass;
    out.report.add(verdict("generic", !det.is_zero(), "det(anchor) = 0"));
  } else if (full_point) {
    // The minor at the pivots of a full-rank point is nonzero there, hence not in the ideal.
    out.generic = Status::pass;
    out.report.add(pass("generic"));
  } else {
    out.generic = Status::inconclusive;
    out.report.add({"generic", Status::inconclusive, "no sample point of full anchor rank", 0});
  }
  return out;
}

Report check_moment_map(const HamiltonianSpace& H) {
  const auto& M = H.space;
  const auto& G = H.group;
  Report r("moment_map:" + M.name);
  r.add_all(check_polymap(H.moment), "map.");
  auto conj = conjugation_action(G);
  std::size_t d = G.algebra.data.dim();
  if (conj.algebra.dim() != M.algebra().dim()) {
    r.add(fail("algebra", "moment map target acted on by an algebra of dimension " +
                              std::to_string(conj.algebra.dim())));
    return r;
  }
  if (!M.algebra().form || !inverse(*M.algebra().form)) {
    r.add(fail("nondegenerate_s", "moment-map checks require a nondegenerate form"));
    return r;
  }
  const auto& target = *G.ring;
  r.run("equivariant", [&] {
    for (std::size_t i = 0; i < M.algebra().dim(); ++i)
      for (std::size_t y = 0; y < target.nvars(); ++y) {
        Polynomial lhs = apply_field(M.action.rho[i], H.moment.components[y]);
        Polynomial rhs = H.moment.pullback(apply_field(conj.rho[i], target.var(y)));
        Polynomial res = M.ring()->reduce(lhs - rhs);
        if (!res.is_zero())
          return fail("equivariant", M.algebra().basis[i] + " on " + target.vars()[y] + ": residue " +
                                         M.ring()->print(res));
      }
    return pass("equivariant");
  });
  r.run("moment_identity", [&] {
    auto duals = dual_fields(M);
    for (std::size_t y = 0; y < target.nvars(); ++y) {
      auto lhs = schouten(M.pi, MultivectorField::function(M.ring(), H.moment.components[y]));
      MultivectorField rhs(M.ring());
      for (std::size_t i = 0; i < M.algebra().dim(); ++i) {
        auto b = b_field(G, i / d, G.algebra.basis[i % d]);
        Polynomial c = H.moment.pullback(apply_field(b, target.var(y)));
        if (!c.is_zero()) rhs += duals[i].times(c);
      }
      if (!(lhs == rhs))
        return fail("moment_identity", "pi#(Phi^* d" + target.vars()[y] + ") - rho(Phi^* b^* d" + target.vars()[y] +
                                           ") = " + (lhs - rhs).to_string());
    }
    return pass("moment_identity");
  });
  return r;
}

namespace {

OneForm theta_pullback(const HamiltonianSpace& H, const Vector& xi, bool left) {
  const auto& G = H.group;
  std::size_t d = G.algebra.data.dim();
  OneForm out(H.space.ring()->nvars(), H.space.ring()->zero());
  for (std::size_t b = 0; b < G.blocks.size(); ++b) {
    Vector part(xi.begin() + static_cast<std::ptrdiff_t>(b * d), xi.begin() + static_cast<std::ptrdiff_t>((b + 1) * d));
    if (is_zero(part)) continue;
    auto form = left ? theta_left(G, b, part) : theta_right(G, b, part);
    out = oneform_add(out, H.moment.pullback(form));
  }
  for (auto& c : out) c = H.space.ring()->reduce(c);
  return out;
}

}  // namespace

OneForm i_map(const HamiltonianSpace& H, const Vector& xi) { return theta_pullback(H, xi, true); }

OneForm i_map_printed(const HamiltonianSpace& H, const Vector& xi) {
  auto out = theta_pullback(H, xi, false);
  for (auto& c : out) c = -c;
  return out;
}

Report check_i_map(const HamiltonianSpace& H, const std::vector<std::vector<Rational>>& points) {
  const auto& M = H.space;
  const auto& L = M.algebra();
  Report r("i_map:" + M.name);
  std::vector<OneForm> i;
  for (std::size_t k = 0; k < L.dim(); ++k) i.push_back(i_map(H, unit(L.dim(), k)));
  r.run("anchor_of_i_is_rho", [&] {
    for (std::size_t k = 0; k < L.dim(); ++k) {
      auto a = anchor(M, i[k]);
      if (!(a == M.action.rho[k]))
        return fail("anchor_of_i_is_rho", "a(i(" + L.basis[k] + ")) - rho = " + (a - M.action.rho[k]).to_string());
    }
    return pass("anchor_of_i_is_rho");
  });
  r.run("i_is_morphism", [&] {
    for (std::size_t a = 0; a < L.dim(); ++a)
      for (std::size_t b = a + 1; b < L.dim(); ++b) {
        auto lhs = oneform_bracket(M, i[a], i[b]);
        auto rhs = i_map(H, L.structure(a, b));
        if (!oneforms_equal(M, lhs, rhs))
          return fail("i_is_morphism", "[i(" + L.basis[a] + "), i(" + L.basis[b] + ")] != i([" + L.basis[a] + ", " +
                                           L.basis[b] + "])");
      }
    return pass("i_is_morphism");
  });
  const auto& ring = *M.ring();
  auto A = anchor_matrix(M);
  for (std::size_t p = 0; p < points.size(); ++p) {
    std::string name = "subspace_identity[" + std::to_string(p) + "]";
    r.run(name, [&] {
      const auto& x = points[p];
      if (!ring.contains_point(x)) return fail(name, "point " + point_string(x) + " is not on the variety");
      std::vector<Vector> lhs, img;
      for (const auto& X : M.action.rho) lhs.push_back(evaluate_field(X, x));
      for (std::size_t k = 0; k < ring.nvars(); ++k) {
        lhs.push_back(evaluate_field(sharp(M.pi, coordinate_form(ring, k)), x));
        Vector col(ring.nvars());
        for (std::size_t j = 0; j < ring.nvars(); ++j) col[j] = A[j][k].evaluate(x);
        img.push_back(col);
      }
      std::size_t r1 = rank_of(lhs, ring.nvars()), r2 = rank_of(img, ring.nvars());
      auto both = lhs;
      both.insert(both.end(), img.begin(), img.end());
      std::size_t r3 = rank_of(both, ring.nvars());
      return verdict(name, r1 == r2 && r2 == r3,
                     "ranks " + std::to_string(r1) + ", " + std::to_string(r2) + ", joint " + std::to_string(r3));
    });
  }
  return r;
}

QPSpace embed(const QPSpace& M, const RingPtr& ring, std::size_t offset) {
  QPSpace out;
  out.name = M.name;
  out.s = M.s;
  out.action.algebra = M.action.algebra;
  for (const auto& X : M.action.rho) out.action.rho.push_back(X.embed(ring, offset));
  out.pi = M.pi.embed(ring, offset);
  for (const auto& X : M.frame) out.frame.push_back(X.embed(ring, offset));
  return out;
}

QPSpace product(const QPSpace& a, const QPSpace& b, const std::vector<std::string>& suffixes) {
  auto ring = product_ring({a.ring(), b.ring()}, suffixes);
  auto ea = embed(a, ring, 0), eb = embed(b, ring, a.ring()->nvars());
  QPSpace out;
  out.name = a.name + "*" + b.name;
  out.action.algebra = direct_sum(a.algebra(), b.algebra(), 1);
  out.action.rho = ea.action.rho;
  out.action.rho.insert(out.action.rho.end(), eb.action.rho.begin(), eb.action.rho.end());
  out.s = block_diagonal(a.s, b.s);
  out.pi = ea.pi + eb.pi;
  out.frame = ea.frame;
  out.frame.insert(out.frame.end(), eb.frame.begin(), eb.frame.end());
  return out;
}

QPSpace fuse(const QPSpace& M, const LieAlgebraData& g, bool with_psi) {
  std::size_t d = g.dim();
  if (M.algebra().dim() != 2 * d) throw std::invalid_argument("fuse: algebra is not a double g + g");
  Matrix sg(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) sg(i, j) = M.s(i, j);
  QPSpace out;
  out.name = "fusion(" + M.name + ")";
  out.action.algebra = g;
  out.s = sg;
  out.frame = M.frame;
  out.pi = M.pi;
  for (std::size_t i = 0; i < d; ++i) {
    out.action.rho.push_back(M.action.rho[i] + M.action.rho[d + i]);
    if (with_psi) {
      Vector ei(2 * d);
      for (std::size_t j = 0; j < d; ++j) ei[j] = sg(i, j);
      out.pi += wedge(rho_of(M.action, ei), M.action.rho[d + i]) * Rational(1, 2);
    }
  }
  return out;
}

HamiltonianSpace fuse(const HamiltonianSpace& H, const MatrixGroupChart& base, bool with_psi) {
  if (H.group.blocks.size() != 2 || base.blocks.size() != 1)
    throw std::invalid_argument("fuse: expected a moment map into G x G");
  HamiltonianSpace out{fuse(H.space, base.algebra.data, with_psi), base, {H.space.ring(), base.ring, {}}};
  std::size_t n = base.n();
  PolyMatrix P0(n, std::vector<Polynomial>(n)), P1 = P0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      P0[r][c] = H.moment.components[H.group.var(0, r, c)];
      P1[r][c] = H.moment.components[H.group.var(1, r, c)];
    }
  auto P = poly_multiply(P0, P1);
  out.moment.components.assign(base.ring->nvars(), H.space.ring()->zero());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.moment.components[base.var(0, r, c)] = H.space.ring()->reduce(P[r][c]);
  return out;
}

HamiltonianSpace product(const HamiltonianSpace& a, const HamiltonianSpace& b,
                         const std::vector<std::string>& suffixes) {
  QPSpace M = product(a.space, b.space, suffixes);
  MatrixGroupChart G = product_group({a.group, b.group}, {"_1", "_2"});
  HamiltonianSpace out{M, G, {M.ring(), G.ring, {}}};
  std::size_t total = M.ring()->nvars(), na = a.space.ring()->nvars();
  for (const auto& c : a.moment.components) out.moment.components.push_back(c.embed(total, 0));
  for (const auto& c : b.moment.components) out.moment.components.push_back(c.embed(total, na));
  return out;
}

HamiltonianSpace fusion_product(const HamiltonianSpace& a, const HamiltonianSpace& b, bool with_psi,
                                const std::vector<std::string>& suffixes) {
  auto out = fuse(product(a, b, suffixes), a.group, with_psi);
  out.space.name = a.space.name + "(*)" + b.space.name;
  return out;
}

GroupActionFn conjugation_group_action(const MatrixGroupChart& G) {
  return [G](const PolyMatrix& g, const std::vector<Polynomial>& x) {
    std::size_t n = G.n();
    std::vector<Polynomial> images(G.ring->nvars());
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) images[G.var(0, r, c)] = g[r][c];
    PolyMatrix ginv(n, std::vector<Polynomial>(n)), X = ginv;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        ginv[r][c] = G.blocks[0].inverse[r][c].substitute(images);
        X[r][c] = x[G.var(0, r, c)];
      }
    auto P = poly_multiply(poly_multiply(g, X), ginv);
    std::vector<Polynomial> out(G.ring->nvars());
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) out[G.var(0, r, c)] = P[r][c];
    return out;
  };
}

PolyMap braiding_map(const HamiltonianSpace& a, const HamiltonianSpace& b, const GroupActionFn& act,
                     const RingPtr& target) {
  auto source = product_ring({a.space.ring(), b.space.ring()}, {"_1", "_2"});
  std::size_t total = source->nvars(), na = a.space.ring()->nvars(), nb = b.space.ring()->nvars();
  const auto& G = a.group;
  PolyMatrix g(G.n(), std::vector<Polynomial>(G.n()));
  for (std::size_t r = 0; r < G.n(); ++r)
    for (std::size_t c = 0; c < G.n(); ++c) g[r][c] = a.moment.components[G.var(0, r, c)].embed(total, 0);
  std::vector<Polynomial> x2;
  for (std::size_t k = 0; k < nb; ++k) x2.push_back(source->var(na + k));
  PolyMap f{source, target, act(g, x2)};
  for (auto& c : f.components) c = source->reduce(c);
  for (std::size_t k = 0; k < na; ++k) f.components.push_back(source->var(k));
  return f;
}

Report check_qp_morphism(const PolyMap& f, const QPSpace& source, const QPSpace& target, bool anti) {
  Report r(std::string(anti ? "anti_" : "") + "qp_morphism:" + source.name + "->" + target.name);
  r.add_all(check_polymap(f), "map.");
  const auto& S = *f.source;
  const auto& T = *f.target;
  r.run("bivector_related", [&] {
    std::vector<OneForm> dy;
    for (std::size_t a = 0; a < T.nvars(); ++a) dy.push_back(differential(S, f.components[a]));
    for (std::size_t a = 0; a < T.nvars(); ++a)
      for (std::size_t b = a + 1; b < T.nvars(); ++b) {
        Polynomial lhs = evaluate_bivector(source.pi, dy[a], dy[b]);
        Polynomial rhs = f.pullback(target.pi.coefficient({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)}));
        Polynomial res = S.reduce(anti ? lhs + rhs : lhs - rhs);
        if (!res.is_zero())
          return fail("bivector_related", "pair (" + T.vars()[a] + "," + T.vars()[b] + "): residue " + S.print(res));
      }
    return pass("bivector_related");
  });
  r.run("action_related", [&] {
    if (source.algebra().dim() != target.algebra().dim())
      return fail("action_related", "algebras of different dimension");
    for (std::size_t i = 0; i < source.algebra().dim(); ++i)
      for (std::size_t a = 0; a < T.nvars(); ++a) {
        Polynomial lhs = apply_field(source.action.rho[i], f.components[a]);
        Polynomial rhs = f.pullback(apply_field(target.action.rho[i], T.var(a)));
        Polynomial res = S.reduce(lhs - rhs);
        if (!res.is_zero())
          return fail("action_related", source.algebra().basis[i] + " on " + T.vars()[a] + ": residue " + S.print(res));
      }
    return pass("action_related");
  });
  return r;
}

TwistResult twist_by_r_matrix(const QPSpace& M, const ExteriorElement& u) {
  TwistResult out{M.pi, Report("twist:" + M.name)};
  auto rm = check_r_matrix(M.algebra(), M.s, u);
  out.report.add(verdict("r_matrix", rm.is_r_matrix, "u fails [u,u] = -phi"));
  if (!rm.is_r_matrix) return out;
  out.pi = M.pi + rho_of(M.action, u);
  auto pp = schouten(out.pi, out.pi);
  out.report.add(verdict("poisson", pp.is_zero(), "[pi',pi'] = " + pp.to_string()));
  return out;
}

Report check_coisotropic_subvariety(const MultivectorField& pi, const RingPtr& S) {
  Report r("coisotropic_subvariety");
  const auto& ring = *pi.ring();
  if (S->nvars() != ring.nvars()) {
    r.add(fail("coisotropic", "subvariety lives in a ring with a different number of variables"));
    return r;
  }
  r.run("coisotropic", [&] {
    const auto& gens = S->ideal_generators();
    std::vector<OneForm> dg;
    for (const auto& g : gens) dg.push_back(differential(ring, g));
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        Polynomial v = S->reduce(evaluate_bivector(pi, dg[i], dg[j]));
        if (!v.is_zero())
          return fail("coisotropic", "pi(d" + S->print(gens[i]) + ", d" + S->print(gens[j]) + ") = " + S->print(v));
      }
    return pass("coisotropic");
  });
  return r;
}

Report check_fusion_algebroid(const HamiltonianSpace& a, const HamiltonianSpace& b, FusionAlgebroidOptions opts) {
  Report r("fusion_algebroid:" + a.space.name + "(*)" + b.space.name);
  const auto& g = a.space.algebra();
  std::size_t d = g.dim();
  QPSpace P = product(a.space, b.space);
  QPSpace F = fuse(P, g);
  auto ring = P.ring();
  std::size_t na = a.space.ring()->nvars();
  QPSpace M1 = embed(a.space, ring, 0), M2 = embed(b.space, ring, na);
  auto fam = generator_family(ring, P.frame);
  auto gens = fam.all();
  auto r1d = dual_fields(M1);

  auto d12 = [&](const MultivectorField& x) {
    return cotangent_differential(M1, x) + cotangent_differential(M2, x);
  };

  r.run("fused_differential_identity", [&] {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto lhs = cotangent_differential(F, gens[k]);
      auto rhs = d12(gens[k]);
      for (std::size_t i = 0; i < d; ++i) rhs += wedge(r1d[i], schouten(M2.action.rho[i], gens[k]));
      if (!(lhs == rhs))
        return fail("fused_differential_identity", "on " + fam.names[k] + ": residue " + (lhs - rhs).to_string());
    }
    return pass("fused_differential_identity");
  });

  r.run("i2_intertwines_anchor", [&] {
    QPSpace printed = b.space;
    printed.pi = -printed.pi;
    for (std::size_t i = 0; i < d; ++i) {
      auto lhs = anchor(printed, i_map_printed(b, unit(d, i)));
      if (!(lhs == b.space.action.rho[i]))
        return fail("i2_intertwines_anchor", "a(i2(" + g.basis[i] + ")) - rho = " + (lhs - b.space.action.rho[i]).to_string());
    }
    return pass("i2_intertwines_anchor");
  });

  // J^*(X) = X - sum_i <i2(e^i), X> rho1(e_i) on coordinate vector fields.
  std::vector<OneForm> i2;
  for (std::size_t i = 0; i < d; ++i) {
    auto form = i_map_printed(b, a.space.s.row(i));
    OneForm lifted(ring->nvars(), ring->zero());
    for (std::size_t k = 0; k < form.size(); ++k) lifted[na + k] = form[k].embed(ring->nvars(), na);
    i2.push_back(lifted);
  }
  std::vector<MultivectorField> images;
  for (std::size_t j = 0; j < ring->nvars(); ++j) {
    auto X = MultivectorField::coordinate(ring, j);
    if (!opts.drop_correction)
      for (std::size_t i = 0; i < d; ++i)
        if (!i2[i][j].is_zero()) X -= M1.action.rho[i].times(i2[i][j]);
    images.push_back(X);
  }
  std::string name = opts.drop_correction ? "chain_map_without_correction" : "chain_map";
  r.run(name, [&] {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      auto lhs = j_star(cotangent_differential(F, gens[k]), images);
      auto rhs = d12(j_star(gens[k], images));
      if (!(lhs == rhs)) return fail(name, "on " + fam.names[k] + ": residue " + (lhs - rhs).to_string());
    }
    return pass(name);
  });
  return r;
}

}  // namespace qpg
