#include "qpg/graded_lie.hpp"

#include <map>
#include <stdexcept>

namespace qpg {

namespace {

int koszul(long p) { return (p % 2 == 0) ? 1 : -1; }

std::string names_pair(const std::vector<std::string>& n, std::size_t i, std::size_t j) {
  return "(" + n[i] + ", " + n[j] + ")";
}

bool isotropic(const Subspace& S, const Matrix& form, std::string* witness) {
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = a; b < S.size(); ++b)
      if (!is_zero(bilinear(S[a], form, S[b]))) {
        if (witness) *witness = "pairing of spanning vectors " + std::to_string(a) + "," + std::to_string(b) + " is nonzero";
        return false;
      }
  return true;
}

// S = S^perp for a nondegenerate form.
bool lagrangian(const Subspace& S, const Matrix& form, std::string* witness) {
  std::size_t n = form.rows();
  std::size_t r = rank_of(S, n);
  if (!isotropic(S, form, witness)) return false;
  auto perp = orthogonal_complement(span_basis(S, n), form);
  if (perp.size() != r) {
    if (witness) *witness = "dim S = " + std::to_string(r) + " but dim S^perp = " + std::to_string(perp.size());
    return false;
  }
  return true;
}

}  // namespace

GradedLieAlgebra::GradedLieAlgebra(std::string name, std::vector<std::string> names, std::vector<int> degrees)
    : name_(std::move(name)), names_(std::move(names)), degrees_(std::move(degrees)) {
  if (names_.size() != degrees_.size()) throw std::invalid_argument("graded Lie algebra: names/degrees mismatch");
  table_.assign(dim() * dim(), Vector(dim()));
}

std::size_t GradedLieAlgebra::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw std::invalid_argument("unknown basis element " + name);
}

void GradedLieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (value.size() != dim()) throw std::invalid_argument("bracket value has wrong dimension");
  table_[i * dim() + j] = value;
  table_[j * dim() + i] = scale(value, Rational(-koszul(static_cast<long>(degrees_[i]) * degrees_[j])));
}

Vector GradedLieAlgebra::bracket(const Vector& a, const Vector& b) const {
  Vector r(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (is_zero(b[j])) continue;
      Rational c = a[i] * b[j];
      const Vector& t = table(i, j);
      for (std::size_t k = 0; k < dim(); ++k)
        if (!is_zero(t[k])) r[k] += c * t[k];
    }
  }
  return r;
}

void GradedLieAlgebra::set_pairing(Matrix m, int degree_sum) {
  if (m.rows() != dim() || m.cols() != dim()) throw std::invalid_argument("pairing has wrong shape");
  pairing_ = std::move(m);
  pairing_degree_sum_ = degree_sum;
}

Rational GradedLieAlgebra::pair(const Vector& a, const Vector& b) const {
  if (!pairing_) throw std::logic_error("graded Lie algebra has no pairing");
  return bilinear(a, *pairing_, b);
}

std::string GradedLieAlgebra::to_string(const Vector& v) const {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    if (!s.empty()) s += " + ";
    s += qpg::to_string(v[i]) + "*" + names_[i];
  }
  return s.empty() ? "0" : s;
}

Report check_graded_lie(const GradedLieAlgebra& A) {
  Report r("graded_lie:" + A.name());
  std::size_t n = A.dim();
  const auto& deg = A.degrees();
  const auto& nm = A.names();
  r.run("antisymmetry", [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Vector expect = scale(A.table(i, j), Rational(-koszul(static_cast<long>(deg[i]) * deg[j])));
        if (A.table(j, i) != expect) return fail("", "bracket " + names_pair(nm, i, j));
      }
    return pass("");
  });
  r.run("homogeneity", [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(A.table(i, j)[k]) && deg[k] != deg[i] + deg[j])
            return fail("", "bracket " + names_pair(nm, i, j) + " has a component along " + nm[k]);
    return pass("");
  });
  r.run("jacobi", [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Vector a = A.basis(i), b = A.basis(j), c = A.basis(k);
          Vector lhs = A.bracket(a, A.bracket(b, c));
          Vector rhs = add(A.bracket(A.bracket(a, b), c),
                           scale(A.bracket(b, A.bracket(a, c)), Rational(koszul(static_cast<long>(deg[i]) * deg[j]))));
          Vector diff = add(lhs, scale(rhs, -1));
          if (!is_zero(diff))
            return fail("", "Jacobiator(" + nm[i] + "," + nm[j] + "," + nm[k] + ") = " + A.to_string(diff));
        }
    return pass("");
  });
  if (A.pairing()) {
    const Matrix& P = *A.pairing();
    r.run("pairing_symmetry", [&] {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (P(i, j) != koszul(static_cast<long>(deg[i]) * deg[j]) * P(j, i))
            return fail("", "pairing " + names_pair(nm, i, j));
      return pass("");
    });
    r.run("pairing_degree", [&] {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!is_zero(P(i, j)) && deg[i] + deg[j] != A.pairing_degree_sum())
            return fail("", "pairing " + names_pair(nm, i, j) + " pairs degrees " + std::to_string(deg[i]) + " and " +
                                std::to_string(deg[j]));
      return pass("");
    });
    r.run("pairing_invariance", [&] {
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t k = 0; k < n; ++k) {
            Vector a = A.basis(i), b = A.basis(j), c = A.basis(k);
            Rational v = A.pair(A.bracket(a, b), c) +
                         koszul(static_cast<long>(deg[i]) * deg[j]) * A.pair(b, A.bracket(a, c));
            if (!is_zero(v))
              return fail("", "<[" + nm[i] + "," + nm[j] + "]," + nm[k] + "> + sign <" + nm[j] + ",[" + nm[i] + "," +
                                  nm[k] + "]> = " + qpg::to_string(v));
          }
      return pass("");
    });
    r.run("pairing_nondegenerate", [&] {
      return verdict("", !is_zero(determinant(P)), "pairing is degenerate");
    });
  }
  return r;
}

GradedLieAlgebra build_ghat(const LieAlgebraData& L) {
  std::size_t n = L.dim();
  std::vector<std::string> names;
  std::vector<int> deg;
  for (const auto& b : L.basis) names.push_back("I_" + b), deg.push_back(-1);
  for (const auto& b : L.basis) names.push_back("L_" + b), deg.push_back(0);
  names.push_back("D");
  deg.push_back(1);
  GradedLieAlgebra A("ghat(" + L.name + ")", names, deg);
  std::size_t N = 2 * n + 1, D = 2 * n;
  auto I = [](std::size_t i) { return i; };
  auto Lx = [n](std::size_t i) { return n + i; };
  for (std::size_t i = 0; i < n; ++i) {
    A.set_bracket(D, I(i), unit(N, Lx(i)));
    for (std::size_t j = 0; j < n; ++j) {
      Vector li(N), ii(N);
      for (std::size_t k = 0; k < n; ++k) {
        li[Lx(k)] = L.c[i][j][k];
        ii[I(k)] = L.c[i][j][k];
      }
      A.set_bracket(Lx(i), Lx(j), li);
      A.set_bracket(Lx(i), I(j), ii);
    }
  }
  return A;
}

Vector QIndex::I_of(const Vector& u) const {
  Vector v(dim());
  for (std::size_t i = 0; i < n; ++i) v[I(i)] = u[i];
  return v;
}

Vector QIndex::L_of(const Vector& u) const {
  Vector v(dim());
  for (std::size_t i = 0; i < n; ++i) v[L(i)] = u[i];
  return v;
}

GradedLieAlgebra build_Q(const LieAlgebraData& L) {
  if (!L.form) throw std::invalid_argument("Q(g) needs an invariant form on g");
  const Matrix& form = *L.form;
  std::size_t n = L.dim();
  QIndex q{n};
  std::vector<std::string> names{"T"};
  std::vector<int> deg{-2};
  for (const auto& b : L.basis) names.push_back("I_" + b), deg.push_back(-1);
  for (const auto& b : L.basis) names.push_back("L_" + b), deg.push_back(0);
  names.push_back("D");
  deg.push_back(1);
  GradedLieAlgebra A("Q(" + L.name + ")", names, deg);
  std::size_t N = q.dim();
  for (std::size_t i = 0; i < n; ++i) {
    A.set_bracket(q.D(), q.I(i), unit(N, q.L(i)));
    for (std::size_t j = 0; j < n; ++j) {
      A.set_bracket(q.I(i), q.I(j), scale(unit(N, q.T()), form(i, j)));
      A.set_bracket(q.L(i), q.L(j), q.L_of(L.c[i][j]));
      A.set_bracket(q.L(i), q.I(j), q.I_of(L.c[i][j]));
    }
  }
  Matrix P(N, N);
  P(q.T(), q.D()) = P(q.D(), q.T()) = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) P(q.I(i), q.L(j)) = P(q.L(j), q.I(i)) = form(i, j);
  A.set_pairing(P, -1);
  return A;
}

GradedLieAlgebra build_Qs(const LieAlgebraData& F, const Matrix& s) {
  std::size_t n = F.dim();
  if (s.rows() != n || s.cols() != n) throw std::invalid_argument("s has wrong shape");
  QIndex q{n};
  std::vector<std::string> names{"T"};
  std::vector<int> deg{-2};
  for (const auto& b : F.basis) names.push_back("a_" + b), deg.push_back(-1);
  for (const auto& b : F.basis) names.push_back(b), deg.push_back(0);
  names.push_back("D");
  deg.push_back(1);
  GradedLieAlgebra A("Q_s(" + F.name + ")", names, deg);
  std::size_t N = q.dim();
  for (std::size_t k = 0; k < n; ++k) {
    Vector sk(n);
    for (std::size_t j = 0; j < n; ++j) sk[j] = s(k, j);
    A.set_bracket(q.D(), q.I(k), q.L_of(sk));
    for (std::size_t l = 0; l < n; ++l) A.set_bracket(q.I(k), q.I(l), scale(unit(N, q.T()), s(k, l)));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A.set_bracket(q.L(i), q.L(j), q.L_of(F.c[i][j]));
  // [e_i, e^k] = -sum_j c^k_{ij} e^j
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Vector v(N);
      for (std::size_t j = 0; j < n; ++j) v[q.I(j)] = -F.c[i][j][k];
      A.set_bracket(q.L(i), q.I(k), v);
    }
  Matrix P(N, N);
  P(q.T(), q.D()) = P(q.D(), q.T()) = 1;
  for (std::size_t i = 0; i < n; ++i) P(q.I(i), q.L(i)) = P(q.L(i), q.I(i)) = 1;
  A.set_pairing(P, -1);
  return A;
}

Subspace span_of(const GradedLieAlgebra& A, const std::vector<std::string>& names) {
  Subspace S;
  for (const auto& n : names) S.push_back(A.basis(A.index_of(n)));
  return S;
}

bool is_subalgebra(const GradedLieAlgebra& A, const Subspace& S, std::string* witness) {
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = a; b < S.size(); ++b) {
      Vector v = A.bracket(S[a], S[b]);
      if (!in_span(S, v, A.dim())) {
        if (witness) *witness = "[" + A.to_string(S[a]) + ", " + A.to_string(S[b]) + "] = " + A.to_string(v);
        return false;
      }
    }
  return true;
}

bool is_ideal(const GradedLieAlgebra& A, const Subspace& S, std::string* witness) {
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (const auto& s : S) {
      Vector v = A.bracket(A.basis(i), s);
      if (!in_span(S, v, A.dim())) {
        if (witness) *witness = "[" + A.names()[i] + ", " + A.to_string(s) + "] = " + A.to_string(v);
        return false;
      }
    }
  return true;
}

bool is_graded_subspace(const GradedLieAlgebra& A, const Subspace& S) {
  for (const auto& v : S) {
    std::map<int, Vector> parts;
    for (std::size_t i = 0; i < A.dim(); ++i) {
      if (is_zero(v[i])) continue;
      auto [it, _] = parts.try_emplace(A.degree(i), Vector(A.dim()));
      it->second[i] = v[i];
    }
    for (const auto& [d, p] : parts)
      if (!in_span(S, p, A.dim())) return false;
  }
  return true;
}

Report check_manin_triple(const GradedLieAlgebra& D, const Subspace& A, const Subspace& B) {
  for (const auto* S : {&A, &B})
    for (const auto& v : *S)
      if (v.size() != D.dim()) throw std::invalid_argument("subspace vector does not live in " + D.name());
  if (!D.pairing()) throw std::invalid_argument(D.name() + " has no pairing");
  Report r("manin_triple:" + D.name());
  const Matrix& P = *D.pairing();
  auto sub = [&](const Subspace& S) {
    std::string w;
    bool ok = is_subalgebra(D, S, &w);
    return verdict("", ok, w);
  };
  auto lag = [&](const Subspace& S) {
    std::string w;
    bool ok = is_graded_subspace(D, S);
    if (!ok) return fail("", "subspace is not graded");
    ok = lagrangian(S, P, &w);
    return verdict("", ok, w);
  };
  r.run("A_subalgebra", [&] { return sub(A); });
  r.run("B_subalgebra", [&] { return sub(B); });
  r.run("A_lagrangian", [&] { return lag(A); });
  r.run("B_lagrangian", [&] { return lag(B); });
  r.run("transversal", [&] {
    std::size_t ra = rank_of(A, D.dim()), rb = rank_of(B, D.dim());
    Subspace both = A;
    both.insert(both.end(), B.begin(), B.end());
    std::size_t rs = rank_of(both, D.dim());
    bool ok = rs == D.dim() && ra + rb == D.dim();
    return verdict("", ok,
                   "dim A = " + std::to_string(ra) + ", dim B = " + std::to_string(rb) + ", dim(A+B) = " +
                       std::to_string(rs) + ", dim D = " + std::to_string(D.dim()));
  });
  return r;
}

ManinTripleData q_manin_triple(const LieAlgebraData& L) {
  ManinTripleData m{build_Q(L), {}, {}};
  QIndex q{L.dim()};
  m.A.push_back(unit(q.dim(), q.T()));
  for (std::size_t i = 0; i < L.dim(); ++i) m.A.push_back(unit(q.dim(), q.I(i)));
  for (std::size_t i = 0; i < L.dim(); ++i) m.B.push_back(unit(q.dim(), q.L(i)));
  m.B.push_back(unit(q.dim(), q.D()));
  return m;
}

namespace {

LieAlgebraData double_of(const LieAlgebraData& L) { return direct_sum(L, L, -1, L.name + "+" + L.name + "bar"); }

Vector pair_vec(const Vector& u, const Vector& v) {
  Vector w = u;
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

}  // namespace

ManinTripleData qd_lagrangian_pair(const LieAlgebraData& L) {
  LieAlgebraData d = double_of(L);
  ManinTripleData m{build_Q(d), {}, {}};
  std::size_t n = L.dim();
  QIndex q{2 * n};
  Vector z(n);
  m.A.push_back(unit(q.dim(), q.T()));
  for (std::size_t i = 0; i < n; ++i) m.A.push_back(q.I_of(pair_vec(unit(n, i), z)));
  for (std::size_t i = 0; i < n; ++i) m.A.push_back(q.L_of(pair_vec(z, unit(n, i))));
  for (std::size_t i = 0; i < n; ++i) m.B.push_back(q.I_of(pair_vec(unit(n, i), unit(n, i))));
  for (std::size_t i = 0; i < n; ++i) m.B.push_back(q.L_of(pair_vec(unit(n, i), unit(n, i))));
  m.B.push_back(unit(q.dim(), q.D()));
  return m;
}

Subspace rhat_graph(const LieAlgebraData& L, const GradedLieAlgebra& Qd) {
  std::size_t n = L.dim();
  QIndex q{2 * n};
  DualBases db = dual_bases(L);
  ManinTripleData pair = qd_lagrangian_pair(L);
  Subspace graph;
  for (const auto& a : pair.A) {
    Vector v = a;
    for (std::size_t i = 0; i < n; ++i) {
      Rational c = Qd.pair(a, q.I_of(pair_vec(db.e_dual[i], db.e_dual[i])));
      if (is_zero(c)) continue;
      v = add(v, scale(q.L_of(pair_vec(db.e[i], db.e[i])), c));
    }
    graph.push_back(v);
  }
  return span_basis(graph, Qd.dim());
}

RHatResult check_rhat_quasitriangular(const LieAlgebraData& L) {
  if (!L.form || is_zero(determinant(*L.form))) throw std::invalid_argument("r-hat needs a nondegenerate form");
  RHatResult res;
  res.report = Report("rhat:" + L.name);
  LieAlgebraData d = double_of(L);
  GradedLieAlgebra Qd = build_Q(d);
  Subspace graph = rhat_graph(L, Qd);
  res.report.run("graph_dimension", [&] {
    return verdict("", graph.size() == 2 * L.dim() + 1, "dim Gr = " + std::to_string(graph.size()));
  });
  res.report.run("graph_is_ideal", [&] {
    res.is_ideal = is_ideal(Qd, graph, &res.witness);
    return verdict("", res.is_ideal, res.witness);
  });
  // Tilt: replace the I(g x 0) block by I(diag).
  std::size_t n = L.dim();
  QIndex q{2 * n};
  Subspace tilted;
  tilted.push_back(unit(q.dim(), q.T()));
  for (std::size_t i = 0; i < n; ++i) {
    tilted.push_back(q.I_of(pair_vec(unit(n, i), unit(n, i))));
    tilted.push_back(q.L_of(pair_vec(unit(n, i), Vector(n))));
  }
  res.report.run("tilted_control_rejected", [&] {
    std::string w;
    res.control_rejected = !is_ideal(Qd, tilted, &w);
    return verdict("", res.control_rejected, "tilted subspace is an ideal");
  });
  return res;
}

bool is_lie_subalgebra(const LieAlgebraData& L, const Subspace& S, std::string* witness) {
  for (std::size_t a = 0; a < S.size(); ++a)
    for (std::size_t b = a + 1; b < S.size(); ++b) {
      Vector v = L.bracket(S[a], S[b]);
      if (!in_span(S, v, L.dim())) {
        if (witness) *witness = "[" + to_string(S[a]) + ", " + to_string(S[b]) + "] = " + to_string(v);
        return false;
      }
    }
  return true;
}

GeneralizedManinTripleResult check_generalized_manin_triple(const GeneralizedManinTriple& T) {
  GeneralizedManinTripleResult res;
  res.report = Report("generalized_manin_triple:" + T.f.name);
  std::size_t n = T.f.dim();
  if (T.s.rows() != n || T.s.cols() != n) throw std::invalid_argument("s has wrong shape");
  Subspace h = span_basis(T.h, n), k = span_basis(T.k, n);
  bool decomposition = false, subalgebras = false, coisotropic = false;
  res.report.run("decomposition", [&] {
    Subspace both = h;
    both.insert(both.end(), k.begin(), k.end());
    decomposition = h.size() + k.size() == n && rank_of(both, n) == n;
    return verdict("", decomposition, "f is not h + k");
  });
  res.report.run("h_subalgebra", [&] {
    std::string w;
    bool ok = is_lie_subalgebra(T.f, h, &w);
    subalgebras = ok;
    return verdict("", ok, w);
  });
  res.report.run("k_subalgebra", [&] {
    std::string w;
    bool ok = is_lie_subalgebra(T.f, k, &w);
    subalgebras = subalgebras && ok;
    return verdict("", ok, w);
  });
  // k^perp = annihilator of k in f*
  std::vector<Vector> ann = k.empty() ? orthogonal_complement({}, Matrix::identity(n))
                                      : nullspace(Matrix::from_rows(k, n));
  std::vector<Vector> image;
  for (const auto& a : ann) image.push_back(T.s.apply(a));
  res.report.run("k_coisotropic", [&] {
    for (const auto& v : image)
      if (!in_span(k, v, n)) return fail("", "s#(ann k) contains " + to_string(v) + " outside k");
    coisotropic = true;
    return pass("");
  });
  res.valid = decomposition && subalgebras && coisotropic;
  bool injective = rank_of(image, n) == ann.size();
  res.transitive = res.valid && injective;
  res.exact = res.transitive && ann.size() == k.size();
  Rational det = determinant(T.s);
  if (!is_zero(det)) {
    Matrix form = *inverse(T.s);
    res.criterion = 2 * k.size() == n && isotropic(k, form, nullptr);
  }
  res.report.add(verdict("valid", res.valid, "decomposition, subalgebra or coisotropy failed"));
  res.report.add(verdict("transitive", res.transitive, "s# restricted to ann k is not injective"));
  res.report.add(verdict("exact", res.exact, "s# restricted to ann k is not a bijection onto k"));
  res.report.add(verdict("exactness_criterion_agrees", !res.valid || res.exact == res.criterion,
                         "rank computation and the nondegenerate/Lagrangian criterion disagree"));
  return res;
}

QPGroupQuadrupleResult check_qp_group_quadruple(const QPGroupQuadruple& Q) {
  if (!Q.g.form || !Q.f.form) throw std::invalid_argument("quadruple needs forms on g and f");
  const Matrix& G = *Q.g.form;
  const Matrix& F = *Q.f.form;
  std::size_t n = Q.g.dim(), m = Q.f.dim();
  if (Q.rho.rows() != m || Q.rho.cols() != n) throw std::invalid_argument("rho has wrong shape");
  auto Ginv = inverse(G);
  if (!Ginv) throw std::invalid_argument("form on g is degenerate");
  QPGroupQuadrupleResult res;
  res.report = Report("qp_group_quadruple:" + Q.f.name);
  res.rho_star = *Ginv * Q.rho.transpose() * F;
  Subspace h = span_basis(Q.h, m), hs = span_basis(Q.hstar, m);
  auto rho = [&](const Vector& xi) { return Q.rho.apply(xi); };
  auto rs = [&](const Vector& x) { return res.rho_star.apply(x); };

  res.report.run("h_lagrangian", [&] {
    std::string w;
    return verdict("", lagrangian(h, F, &w), w);
  });
  res.report.run("decomposition", [&] {
    Subspace both = h;
    both.insert(both.end(), hs.begin(), hs.end());
    return verdict("", h.size() + hs.size() == m && rank_of(both, m) == m, "f is not h + h*");
  });
  res.report.run("h_subalgebra", [&] {
    std::string w;
    return verdict("", is_lie_subalgebra(Q.f, h, &w), w);
  });
  res.report.run("hstar_subalgebra", [&] {
    std::string w;
    return verdict("", is_lie_subalgebra(Q.f, hs, &w), w);
  });
  res.report.run("rho_morphism", [&] {
    for (std::size_t i = 0; i < n; ++i) {
      if (!in_span(h, rho(unit(n, i)), m)) return fail("", "rho(" + Q.g.basis[i] + ") not in h");
      for (std::size_t j = 0; j < n; ++j) {
        Vector l = rho(Q.g.bracket(unit(n, i), unit(n, j)));
        Vector r = Q.f.bracket(rho(unit(n, i)), rho(unit(n, j)));
        if (l != r) return fail("", "rho[" + Q.g.basis[i] + "," + Q.g.basis[j] + "] != [rho,rho]");
      }
    }
    return pass("");
  });
  res.report.run("rho_star_morphism", [&] {
    for (std::size_t a = 0; a < hs.size(); ++a)
      for (std::size_t b = 0; b < hs.size(); ++b)
        if (rs(Q.f.bracket(hs[a], hs[b])) != Q.g.bracket(rs(hs[a]), rs(hs[b])))
          return fail("", "h* basis pair " + std::to_string(a) + "," + std::to_string(b));
    return pass("");
  });
  res.report.run("form_compatibility", [&] {
    for (std::size_t a = 0; a < hs.size(); ++a)
      for (std::size_t b = 0; b < hs.size(); ++b) {
        Rational l = bilinear(hs[a], F, hs[b]);
        Rational r = bilinear(rs(hs[a]), G, rs(hs[b]));
        if (l != r)
          return fail("", "h* basis pair " + std::to_string(a) + "," + std::to_string(b) + ": <x,y>_f = " +
                              qpg::to_string(l) + ", <rho* x, rho* y>_g = " + qpg::to_string(r));
      }
    return pass("");
  });
  res.report.run("rho_preserves_hstar", [&] {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t a = 0; a < hs.size(); ++a) {
        Vector br = Q.f.bracket(rho(unit(n, i)), hs[a]);
        if (!in_span(hs, br, m)) return fail("", "[rho(" + Q.g.basis[i] + "), h*] leaves h*");
        if (rs(br) != Q.g.bracket(unit(n, i), rs(hs[a])))
          return fail("", "rho*[rho(" + Q.g.basis[i] + "), x] != [xi, rho* x]");
      }
    return pass("");
  });

  for (std::size_t i = 0; i < n; ++i) {
    Vector v = pair_vec(pair_vec(unit(n, i), unit(n, i)), rho(unit(n, i)));
    res.K.push_back(v);
  }
  for (const auto& x : hs) res.K.push_back(pair_vec(pair_vec(rs(x), Vector(n)), x));

  LieAlgebraData total = direct_sum(double_of(Q.g), Q.f, -1, "d+fbar");
  res.report.run("K_lagrangian", [&] {
    std::string w;
    return verdict("", lagrangian(res.K, *total.form, &w), w);
  });
  res.report.run("K_subalgebra", [&] {
    std::string w;
    return verdict("", is_lie_subalgebra(total, res.K, &w), w);
  });
  return res;
}

}  // namespace qpg
