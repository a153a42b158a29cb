#include "qpg/lie.hpp"

#include <algorithm>
#include <stdexcept>

namespace qpg {

LieAlgebraData::LieAlgebraData(std::string n, std::vector<std::string> b)
    : name(std::move(n)), basis(std::move(b)) {
  std::size_t d = basis.size();
  c.assign(d, std::vector<Vector>(d, Vector(d)));
}

void LieAlgebraData::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (value.size() != dim()) throw std::invalid_argument("bracket value dimension mismatch");
  c[i][j] = value;
  if (i != j) c[j][i] = scale(value, -1);
}

Vector LieAlgebraData::bracket(const Vector& x, const Vector& y) const {
  Vector r(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational f = x[i] * y[j];
      for (std::size_t k = 0; k < dim(); ++k) r[k] += f * c[i][j][k];
    }
  }
  return r;
}

Matrix LieAlgebraData::ad(const Vector& x) const {
  Matrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vector col = bracket(x, unit(dim(), j));
    for (std::size_t k = 0; k < dim(); ++k) m(k, j) = col[k];
  }
  return m;
}

Matrix LieAlgebraData::s_tensor() const {
  if (!form) throw std::invalid_argument(name + ": no invariant form");
  auto inv = inverse(*form);
  if (!inv) throw std::invalid_argument(name + ": degenerate form");
  return *inv;
}

LieAlgebraData abelian_algebra(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  LieAlgebraData L("abelian" + std::to_string(n), names);
  L.form = Matrix::identity(n);
  return L;
}

LieAlgebraData so3_algebra() {
  LieAlgebraData L("so3", {"e1", "e2", "e3"});
  L.set_bracket(0, 1, {0, 0, 1});
  L.set_bracket(1, 2, {1, 0, 0});
  L.set_bracket(2, 0, {0, 1, 0});
  L.form = Matrix::identity(3);
  return L;
}

LieAlgebraData sl2_algebra() {
  LieAlgebraData L("sl2", {"h", "e", "f"});
  L.set_bracket(0, 1, {0, 2, 0});
  L.set_bracket(0, 2, {0, 0, -2});
  L.set_bracket(1, 2, {1, 0, 0});
  Matrix form(3, 3);
  form(0, 0) = 2;
  form(1, 2) = 1;
  form(2, 1) = 1;
  L.form = form;
  return L;
}

LieAlgebraData direct_sum(const LieAlgebraData& a, const LieAlgebraData& b, int form_sign_b,
                          const std::string& name) {
  std::vector<std::string> names;
  for (const auto& n : a.basis) names.push_back(n + "_1");
  for (const auto& n : b.basis) names.push_back(n + "_2");
  std::size_t da = a.dim(), db = b.dim(), d = da + db;
  LieAlgebraData L(name.empty() ? a.name + "+" + b.name : name, names);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k) L.c[i][j][k] = a.c[i][j][k];
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k) L.c[da + i][da + j][da + k] = b.c[i][j][k];
  if (a.form && b.form) {
    Matrix f(d, d);
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < da; ++j) f(i, j) = (*a.form)(i, j);
    for (std::size_t i = 0; i < db; ++i)
      for (std::size_t j = 0; j < db; ++j) f(da + i, da + j) = (*b.form)(i, j) * form_sign_b;
    L.form = f;
  }
  return L;
}

Report check_lie_algebra(const LieAlgebraData& L) {
  Report r("lie_algebra:" + L.name);
  std::size_t d = L.dim();
  if (L.c.size() != d) throw std::invalid_argument("structure constant table dimension mismatch");
  for (const auto& row : L.c) {
    if (row.size() != d) throw std::invalid_argument("structure constant table dimension mismatch");
    for (const auto& v : row)
      if (v.size() != d) throw std::invalid_argument("structure constant table dimension mismatch");
  }
  r.run("antisymmetry", [&] {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (add(L.c[i][j], L.c[j][i]) != Vector(d, 0))
          return fail("", "[" + L.basis[i] + "," + L.basis[j] + "] not antisymmetric");
    return pass("");
  });
  r.run("jacobi", [&] {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          Vector ei = unit(d, i), ej = unit(d, j), ek = unit(d, k);
          Vector s = add(add(L.bracket(ei, L.bracket(ej, ek)), L.bracket(ej, L.bracket(ek, ei))),
                         L.bracket(ek, L.bracket(ei, ej)));
          if (!is_zero(s))
            return fail("", "Jacobiator(" + L.basis[i] + "," + L.basis[j] + "," + L.basis[k] + ") = " + to_string(s));
        }
    return pass("");
  });
  if (L.form) {
    r.run("form_symmetric", [&] { return verdict("", L.form->is_symmetric(), "form not symmetric"); });
    r.run("form_invariant", [&] { return verdict("", check_invariant_form(L, *L.form), "form not ad-invariant"); });
  }
  return r;
}

bool check_invariant_form(const LieAlgebraData& L, const Matrix& form) {
  if (!form.is_symmetric()) throw std::invalid_argument("form is not symmetric");
  std::size_t d = L.dim();
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        Vector ex = unit(d, x), ey = unit(d, y), ez = unit(d, z);
        if (bilinear(L.bracket(ex, ey), form, ez) + bilinear(ey, form, L.bracket(ex, ez)) != 0) return false;
      }
  return true;
}

bool check_invariant_tensor(const LieAlgebraData& L, const Matrix& s) {
  if (!s.is_symmetric()) throw std::invalid_argument("tensor is not symmetric");
  std::size_t d = L.dim();
  for (std::size_t x = 0; x < d; ++x) {
    Matrix a = L.ad(unit(d, x));
    Matrix t = a * s + s * a.transpose();
    if (!t.is_zero()) return false;
  }
  return true;
}

namespace {

// Sorts idx in place; returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(ExteriorElement::Index& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i)
    if (idx[i - 1] == idx[i]) return 0;
  return sign;
}

}  // namespace

ExteriorElement ExteriorElement::from_vector(const Vector& v) {
  ExteriorElement e(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) e.add_wedge({static_cast<std::uint32_t>(i)}, v[i]);
  return e;
}

ExteriorElement ExteriorElement::basis_element(std::size_t dim, std::size_t i) {
  ExteriorElement e(dim);
  e.add_wedge({static_cast<std::uint32_t>(i)}, 1);
  return e;
}

void ExteriorElement::add_wedge(Index idx, const Rational& c) {
  if (qpg::is_zero(c)) return;
  for (auto i : idx)
    if (i >= dim_) throw std::out_of_range("exterior index out of range");
  int s = sort_with_sign(idx);
  if (s == 0) return;
  auto [it, inserted] = terms_.try_emplace(idx, s > 0 ? c : Rational(-c));
  if (!inserted) {
    it->second += s > 0 ? c : Rational(-c);
    if (qpg::is_zero(it->second)) terms_.erase(it);
  }
}

Rational ExteriorElement::coefficient(const Index& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

ExteriorElement& ExteriorElement::operator+=(const ExteriorElement& o) {
  if (dim_ == 0) dim_ = o.dim_;
  for (const auto& [i, c] : o.terms_) add_wedge(i, c);
  return *this;
}

ExteriorElement& ExteriorElement::operator-=(const ExteriorElement& o) {
  if (dim_ == 0) dim_ = o.dim_;
  for (const auto& [i, c] : o.terms_) add_wedge(i, -c);
  return *this;
}

ExteriorElement operator*(ExteriorElement a, const Rational& c) {
  if (is_zero(c)) {
    a.terms_.clear();
    return a;
  }
  for (auto& [i, v] : a.terms_) v *= c;
  return a;
}

std::vector<std::size_t> ExteriorElement::degrees() const {
  std::vector<std::size_t> ds;
  for (const auto& [i, c] : terms_)
    if (std::find(ds.begin(), ds.end(), i.size()) == ds.end()) ds.push_back(i.size());
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::string ExteriorElement::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) out += " + ";
    first = false;
    std::string w;
    for (auto i : idx) {
      if (!w.empty()) w += "^";
      w += i < names.size() ? names[i] : "e" + std::to_string(i);
    }
    if (w.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += w;
    } else {
      out += c.get_str() + "*" + w;
    }
  }
  return out;
}

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b) {
  ExteriorElement r(std::max(a.dim(), b.dim()));
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      ExteriorElement::Index idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add_wedge(idx, ca * cb);
    }
  return r;
}

namespace {

ExteriorElement monomial(std::size_t dim, const ExteriorElement::Index& idx, std::size_t lo, std::size_t hi) {
  ExteriorElement e(dim);
  e.add_wedge(ExteriorElement::Index(idx.begin() + static_cast<long>(lo), idx.begin() + static_cast<long>(hi)), 1);
  return e;
}

// {X, y} for a basis monomial X and a basis vector y.
ExteriorElement bracket_with_vector(const LieAlgebraData& L, const ExteriorElement::Index& x, std::size_t y) {
  std::size_t d = L.dim();
  ExteriorElement out(d);
  for (std::size_t i = 0; i < x.size(); ++i) {
    ExteriorElement mid = ExteriorElement::from_vector(L.c[x[i]][y]);
    if (mid.is_zero()) continue;
    out += wedge(wedge(monomial(d, x, 0, i), mid), monomial(d, x, i + 1, x.size()));
  }
  return out;
}

}  // namespace

ExteriorElement gerstenhaber_bracket(const LieAlgebraData& L, const ExteriorElement& a, const ExteriorElement& b) {
  std::size_t d = L.dim();
  ExteriorElement out(d);
  for (const auto& [x, cx] : a.terms()) {
    std::size_t p = x.size();
    for (const auto& [y, cy] : b.terms()) {
      for (std::size_t j = 0; j < y.size(); ++j) {
        ExteriorElement mid = bracket_with_vector(L, x, y[j]);
        if (mid.is_zero()) continue;
        ExteriorElement term = wedge(wedge(monomial(d, y, 0, j), mid), monomial(d, y, j + 1, y.size()));
        Rational coef = cx * cy;
        if (p >= 1 && ((p - 1) * j) % 2 == 1) coef = -coef;
        out += term * coef;
      }
    }
  }
  return out;
}

GradedAlgebraPtr exterior_gerstenhaber_algebra(const LieAlgebraData& L) {
  std::vector<GradedGenerator> gens;
  for (const auto& n : L.basis) gens.push_back({n, 1});
  auto alg = GradedAlgebra::make(gens);
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i; j < L.dim(); ++j) {
      GradedElement v = alg->zero();
      for (std::size_t k = 0; k < L.dim(); ++k)
        if (!is_zero(L.c[i][j][k])) v += alg->gen(k) * L.c[i][j][k];
      alg->set_bracket(i, j, v);
    }
  return alg;
}

GradedElement to_graded(const ExteriorElement& x, const GradedAlgebra& alg) {
  GradedElement out = alg.zero();
  for (const auto& [idx, c] : x.terms()) {
    GradedElement::Word w(idx.begin(), idx.end());
    out.add_term(w, alg.ring().constant(c));
  }
  return out;
}

ExteriorElement from_graded(const GradedElement& x, std::size_t dim) {
  ExteriorElement out(dim);
  for (const auto& [w, c] : x.terms()) out.add_wedge(ExteriorElement::Index(w.begin(), w.end()), c.constant_term());
  return out;
}

ExteriorElement cartan_trivector(const LieAlgebraData& L, const Matrix& s) {
  std::size_t d = L.dim();
  ExteriorElement phi(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t c = b + 1; c < d; ++c) {
        Rational v = 0;
        for (std::size_t j = 0; j < d; ++j) {
          if (sgn(s(b, j)) == 0) continue;
          for (std::size_t k = 0; k < d; ++k) v += s(b, j) * s(c, k) * L.c[j][k][a];
        }
        phi.add_wedge({static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(c)},
                      v / 2);
      }
  return phi;
}

DualBases dual_bases(const LieAlgebraData& L) {
  Matrix s = L.s_tensor();
  DualBases db;
  for (std::size_t i = 0; i < L.dim(); ++i) {
    db.e.push_back(unit(L.dim(), i));
    db.e_dual.push_back(s.row(i));
  }
  return db;
}

RMatrixReport check_r_matrix(const LieAlgebraData& L, const Matrix& s, const ExteriorElement& u) {
  for (auto deg : u.degrees())
    if (deg != 2) throw std::invalid_argument("r-matrix candidate is not in wedge^2");
  RMatrixReport out;
  out.report = Report("r_matrix:" + L.name);
  std::size_t d = L.dim();
  ExteriorElement phi = cartan_trivector(L, s);
  ExteriorElement uu = gerstenhaber_bracket(L, u, u);
  out.is_r_matrix = (uu + phi).is_zero();
  out.report.add(verdict("[u,u]=-phi", out.is_r_matrix, "[u,u]+phi = " + (uu + phi).to_string(L.basis)));
  for (std::size_t i = 0; i < d; ++i)
    out.cobracket.push_back(gerstenhaber_bracket(L, u, ExteriorElement::basis_element(d, i)));
  // Dual bracket on g*: [e^i, e^j]_* = sum_k delta(e_k)^{ij} e^k.
  LieAlgebraData dual(L.name + "*", L.basis);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Vector v(d);
      for (std::size_t k = 0; k < d; ++k)
        v[k] = out.cobracket[k].coefficient({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
      dual.set_bracket(i, j, v);
    }
  out.co_jacobi = check_lie_algebra(dual).all_passed();
  out.report.add(verdict("co-jacobi", out.co_jacobi, "dual bracket violates Jacobi"));
  out.cocycle = true;
  std::string witness;
  for (std::size_t i = 0; i < d && out.cocycle; ++i)
    for (std::size_t j = 0; j < d && out.cocycle; ++j) {
      ExteriorElement lhs(d);
      for (std::size_t k = 0; k < d; ++k) lhs += out.cobracket[k] * L.c[i][j][k];
      ExteriorElement rhs = gerstenhaber_bracket(L, ExteriorElement::basis_element(d, i), out.cobracket[j]) -
                            gerstenhaber_bracket(L, ExteriorElement::basis_element(d, j), out.cobracket[i]);
      if (!(lhs - rhs).is_zero()) {
        out.cocycle = false;
        witness = "cocycle fails on (" + L.basis[i] + "," + L.basis[j] + ")";
      }
    }
  out.report.add(verdict("cocycle", out.cocycle, witness));
  return out;
}

std::optional<Rational> solve_r_matrix_scale(const LieAlgebraData& L, const Matrix& s, const ExteriorElement& u) {
  ExteriorElement phi = cartan_trivector(L, s);
  ExteriorElement uu = gerstenhaber_bracket(L, u, u);
  if (phi.is_zero()) return uu.is_zero() ? std::optional<Rational>(1) : std::nullopt;
  if (uu.is_zero()) return std::nullopt;
  // [cu,cu] = c^2 [u,u] must equal -phi.
  const auto& [idx, coef] = *uu.terms().begin();
  Rational k = -phi.coefficient(idx) / coef;
  if (!((uu * k) + phi).is_zero() || sgn(k) <= 0) return std::nullopt;
  Integer n = k.get_num(), dd = k.get_den();
  Integer rn = sqrt(n), rd = sqrt(dd);
  if (rn * rn != n || rd * rd != dd) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace qpg
