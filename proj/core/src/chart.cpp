#include "qpg/chart.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qpg {

namespace {

// Sorts idx in place; returns the permutation sign, or 0 on a repeat.
int sort_sign(MultivectorField::Index& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

void require_same(const MultivectorField& a, const MultivectorField& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("multivector fields live on different charts");
}

std::string name_of(const CoordinateRing& ring, std::size_t i) { return ring.vars()[i]; }

}  // namespace

MultivectorField MultivectorField::function(RingPtr ring, const Polynomial& f) {
  MultivectorField m(ring);
  m.add_term({}, f);
  return m;
}

MultivectorField MultivectorField::coordinate(RingPtr ring, std::size_t i) {
  MultivectorField m(ring);
  m.add_term({static_cast<std::uint32_t>(i)}, m.ring_->one());
  return m;
}

MultivectorField MultivectorField::vector_field(RingPtr ring, const std::vector<Polynomial>& comps) {
  MultivectorField m(ring);
  for (std::size_t i = 0; i < comps.size(); ++i) m.add_term({static_cast<std::uint32_t>(i)}, comps[i]);
  return m;
}

std::vector<std::size_t> MultivectorField::degrees() const {
  std::vector<std::size_t> out;
  for (const auto& [idx, c] : terms_)
    if (std::find(out.begin(), out.end(), idx.size()) == out.end()) out.push_back(idx.size());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t MultivectorField::degree() const {
  auto d = degrees();
  if (d.empty()) return 0;
  if (d.size() > 1) throw std::invalid_argument("multivector field of mixed degree");
  return d[0];
}

void MultivectorField::add_term(Index idx, const Polynomial& c) {
  if (c.is_zero()) return;
  int sign = sort_sign(idx);
  if (sign == 0) return;
  auto it = terms_.find(idx);
  Polynomial sum = it == terms_.end() ? ring_->zero() : it->second;
  if (sign > 0)
    sum += c;
  else
    sum -= c;
  sum = ring_->reduce(sum);
  if (sum.is_zero()) {
    if (it != terms_.end()) terms_.erase(it);
  } else {
    terms_[idx] = std::move(sum);
  }
}

Polynomial MultivectorField::coefficient(const Index& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? ring_->zero() : it->second;
}

std::vector<Polynomial> MultivectorField::components() const {
  std::vector<Polynomial> out(ring_->nvars(), ring_->zero());
  for (const auto& [idx, c] : terms_) {
    if (idx.size() != 1) throw std::invalid_argument("not a vector field");
    out[idx[0]] = c;
  }
  return out;
}

MultivectorField& MultivectorField::operator+=(const MultivectorField& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [idx, c] : o.terms_) add_term(idx, c);
  return *this;
}

MultivectorField& MultivectorField::operator-=(const MultivectorField& o) {
  if (!ring_) ring_ = o.ring_;
  for (const auto& [idx, c] : o.terms_) add_term(idx, -c);
  return *this;
}

MultivectorField operator*(MultivectorField a, const Rational& c) {
  if (qpg::is_zero(c)) return MultivectorField(a.ring_);
  for (auto& [idx, p] : a.terms_) p *= c;
  return a;
}

MultivectorField MultivectorField::operator-() const { return *this * Rational(-1); }

MultivectorField MultivectorField::times(const Polynomial& f) const {
  MultivectorField out(ring_);
  for (const auto& [idx, c] : terms_) out.add_term(idx, c * f);
  return out;
}

std::map<MultivectorField::Index, Rational> MultivectorField::evaluate(const std::vector<Rational>& point) const {
  std::map<Index, Rational> out;
  for (const auto& [idx, c] : terms_) {
    Rational v = c.evaluate(point);
    if (!qpg::is_zero(v)) out[idx] = v;
  }
  return out;
}

MultivectorField MultivectorField::embed(RingPtr target, std::size_t offset) const {
  MultivectorField out(target);
  for (const auto& [idx, c] : terms_) {
    Index shifted = idx;
    for (auto& i : shifted) i += static_cast<std::uint32_t>(offset);
    out.add_term(shifted, c.embed(target->nvars(), offset));
  }
  return out;
}

MultivectorField MultivectorField::relabel(RingPtr target, const std::vector<std::size_t>& var_map) const {
  std::vector<Polynomial> images;
  for (auto v : var_map) images.push_back(target->var(v));
  MultivectorField out(target);
  for (const auto& [idx, c] : terms_) {
    Index moved;
    for (auto i : idx) moved.push_back(static_cast<std::uint32_t>(var_map[i]));
    out.add_term(std::move(moved), c.substitute(images));
  }
  return out;
}

std::string MultivectorField::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << ring_->print(c) << ")";
    for (auto i : idx) os << "*d_" << name_of(*ring_, i);
  }
  return os.str();
}

MultivectorField wedge(const MultivectorField& a, const MultivectorField& b) {
  require_same(a, b);
  MultivectorField out(a.ring());
  for (const auto& [ia, ca] : a.terms())
    for (const auto& [ib, cb] : b.terms()) {
      MultivectorField::Index idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      out.add_term(std::move(idx), ca * cb);
    }
  return out;
}

MultivectorField right_derivative(const MultivectorField& a, std::size_t i) {
  MultivectorField out(a.ring());
  for (const auto& [idx, c] : a.terms()) {
    auto it = std::find(idx.begin(), idx.end(), i);
    if (it == idx.end()) continue;
    std::size_t m = static_cast<std::size_t>(it - idx.begin());
    MultivectorField::Index rest = idx;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(m));
    bool odd = (idx.size() - 1 - m) % 2 != 0;
    out.add_term(std::move(rest), odd ? -c : c);
  }
  return out;
}

namespace {

MultivectorField x_derivative(const MultivectorField& a, std::size_t i) {
  MultivectorField out(a.ring());
  for (const auto& [idx, c] : a.terms()) out.add_term(idx, c.derivative(i));
  return out;
}

MultivectorField schouten_homogeneous(const MultivectorField& a, std::size_t p, const MultivectorField& b,
                                      std::size_t q) {
  MultivectorField out(a.ring());
  long e = (static_cast<long>(p) - 1) * (static_cast<long>(q) - 1);
  bool flip = e % 2 != 0;
  for (std::size_t i = 0; i < a.ring()->nvars(); ++i) {
    auto ra = right_derivative(a, i);
    if (!ra.is_zero()) out += wedge(ra, x_derivative(b, i));
    auto rb = right_derivative(b, i);
    if (!rb.is_zero()) {
      auto t = wedge(rb, x_derivative(a, i));
      if (flip)
        out += t;
      else
        out -= t;
    }
  }
  return out;
}

std::map<std::size_t, MultivectorField> split(const MultivectorField& a) {
  std::map<std::size_t, MultivectorField> out;
  for (const auto& [idx, c] : a.terms()) {
    auto it = out.try_emplace(idx.size(), a.ring()).first;
    it->second.add_term(idx, c);
  }
  return out;
}

}  // namespace

MultivectorField schouten(const MultivectorField& a, const MultivectorField& b) {
  if (a.is_zero() || b.is_zero()) return MultivectorField(a.ring() ? a.ring() : b.ring());
  require_same(a, b);
  MultivectorField out(a.ring());
  auto sa = split(a), sb = split(b);
  for (const auto& [p, ap] : sa)
    for (const auto& [q, bq] : sb) out += schouten_homogeneous(ap, p, bq, q);
  return out;
}

Polynomial apply_field(const MultivectorField& X, const Polynomial& f) {
  const auto& ring = *X.ring();
  Polynomial out = ring.zero();
  for (const auto& [idx, c] : X.terms()) {
    if (idx.size() != 1) throw std::invalid_argument("apply_field expects a vector field");
    out += c * f.derivative(idx[0]);
  }
  return ring.reduce(out);
}

std::optional<std::string> ideal_violation(const MultivectorField& P) {
  const auto& ring = P.ring();
  for (const auto& g : ring->ideal_generators()) {
    auto r = schouten(P, MultivectorField::function(ring, g));
    if (!r.is_zero())
      return "[P, " + ring->print(g) + "] = " + r.to_string() + " is not in the ideal";
  }
  return std::nullopt;
}

OneForm differential(const CoordinateRing& ring, const Polynomial& f) {
  OneForm out;
  for (std::size_t k = 0; k < ring.nvars(); ++k) out.push_back(ring.reduce(f.derivative(k)));
  return out;
}

OneForm oneform_add(const OneForm& a, const OneForm& b) {
  OneForm out = a;
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}

OneForm oneform_scale(const OneForm& a, const Polynomial& f) {
  OneForm out;
  for (const auto& c : a) out.push_back(c * f);
  return out;
}

Polynomial contract(const OneForm& alpha, const MultivectorField& X) {
  const auto& ring = *X.ring();
  Polynomial out = ring.zero();
  for (const auto& [idx, c] : X.terms()) {
    if (idx.size() != 1) throw std::invalid_argument("contract expects a vector field");
    out += alpha[idx[0]] * c;
  }
  return ring.reduce(out);
}

Polynomial evaluate_bivector(const MultivectorField& pi, const OneForm& alpha, const OneForm& beta) {
  const auto& ring = *pi.ring();
  Polynomial out = ring.zero();
  for (const auto& [idx, c] : pi.terms()) {
    if (idx.size() != 2) throw std::invalid_argument("evaluate_bivector expects a bivector");
    out += c * (alpha[idx[0]] * beta[idx[1]] - alpha[idx[1]] * beta[idx[0]]);
  }
  return ring.reduce(out);
}

MultivectorField sharp(const MultivectorField& pi, const OneForm& alpha) {
  const auto& ring = pi.ring();
  std::vector<Polynomial> comps;
  for (std::size_t k = 0; k < ring->nvars(); ++k) {
    OneForm dk(ring->nvars(), ring->zero());
    dk[k] = ring->one();
    comps.push_back(evaluate_bivector(pi, dk, alpha));
  }
  return MultivectorField::vector_field(ring, comps);
}

bool oneform_is_zero(const CoordinateRing& ring, const OneForm& a) {
  return std::all_of(a.begin(), a.end(), [&](const Polynomial& p) { return ring.reduce(p).is_zero(); });
}

MultivectorField rho_of(const GAction& act, const Vector& xi) {
  MultivectorField out(act.rho.at(0).ring());
  for (std::size_t i = 0; i < xi.size(); ++i)
    if (!qpg::is_zero(xi[i])) out += act.rho[i] * xi[i];
  return out;
}

MultivectorField rho_of(const GAction& act, const ExteriorElement& x) {
  const auto& ring = act.rho.at(0).ring();
  MultivectorField out(ring);
  for (const auto& [idx, c] : x.terms()) {
    MultivectorField term = MultivectorField::function(ring, ring->constant(c));
    for (auto i : idx) term = wedge(term, act.rho[i]);
    out += term;
  }
  return out;
}

Report check_action(const GAction& act) {
  Report r("action");
  const auto& L = act.algebra;
  r.run("homomorphism", [&] {
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = i + 1; j < L.dim(); ++j) {
        auto lhs = schouten(act.rho[i], act.rho[j]);
        auto rhs = rho_of(act, L.structure(i, j));
        if (!(lhs == rhs))
          return fail("homomorphism", "[rho(" + L.basis[i] + "), rho(" + L.basis[j] + ")] - rho([" + L.basis[i] +
                                          ", " + L.basis[j] + "]) = " + (lhs - rhs).to_string());
      }
    return pass("homomorphism");
  });
  r.run("ideal_preserved", [&] {
    for (std::size_t i = 0; i < L.dim(); ++i)
      if (auto w = ideal_violation(act.rho[i])) return fail("ideal_preserved", L.basis[i] + ": " + *w);
    return pass("ideal_preserved");
  });
  return r;
}

GAction trivial_action(const LieAlgebraData& L, RingPtr ring) {
  GAction act{L, {}};
  for (std::size_t i = 0; i < L.dim(); ++i) act.rho.emplace_back(ring);
  return act;
}

Matrix MatrixLieAlgebra::matrix_of(const Vector& xi) const {
  Matrix m(n, n);
  for (std::size_t i = 0; i < xi.size(); ++i)
    if (!qpg::is_zero(xi[i])) {
      Matrix t = basis[i];
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) += xi[i] * t(r, c);
    }
  return m;
}

MatrixLieAlgebra sl2_matrices() {
  MatrixLieAlgebra m{sl2_algebra(), 2, {}};
  Matrix h(2, 2), e(2, 2), f(2, 2);
  h(0, 0) = 1;
  h(1, 1) = -1;
  e(0, 1) = 1;
  f(1, 0) = 1;
  m.basis = {h, e, f};
  return m;
}

MatrixLieAlgebra so3_matrices() {
  MatrixLieAlgebra m{so3_algebra(), 3, {}};
  Matrix e1(3, 3), e2(3, 3), e3(3, 3);
  e1(1, 2) = -1;
  e1(2, 1) = 1;
  e2(0, 2) = 1;
  e2(2, 0) = -1;
  e3(0, 1) = -1;
  e3(1, 0) = 1;
  m.basis = {e1, e2, e3};
  return m;
}

bool check_matrix_realization(const MatrixLieAlgebra& m, std::string* witness) {
  for (std::size_t i = 0; i < m.data.dim(); ++i)
    for (std::size_t j = 0; j < m.data.dim(); ++j) {
      Matrix lhs = m.basis[i] * m.basis[j] - m.basis[j] * m.basis[i];
      if (!(lhs == m.matrix_of(m.data.structure(i, j)))) {
        if (witness) *witness = "[" + m.data.basis[i] + ", " + m.data.basis[j] + "]";
        return false;
      }
    }
  return true;
}

PolyMatrix poly_multiply(const PolyMatrix& a, const PolyMatrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  std::size_t nv = a[0][0].nvars();
  PolyMatrix out(n, std::vector<Polynomial>(m, Polynomial(nv)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < k; ++l) out[i][j] += a[i][l] * b[l][j];
  return out;
}

PolyMatrix poly_constant(const Matrix& m, std::size_t nvars) {
  PolyMatrix out(m.rows(), std::vector<Polynomial>(m.cols(), Polynomial(nvars)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = Polynomial::constant(nvars, m(i, j));
  return out;
}

PolyMatrix MatrixGroupChart::entries(std::size_t block) const {
  PolyMatrix out(n(), std::vector<Polynomial>(n()));
  for (std::size_t r = 0; r < n(); ++r)
    for (std::size_t c = 0; c < n(); ++c) out[r][c] = ring->var(var(block, r, c));
  return out;
}

MatrixGroupChart sl2_group(const std::string& prefix) {
  std::vector<std::string> vars{prefix + "11", prefix + "12", prefix + "21", prefix + "22"};
  auto x = [](std::size_t i) { return Polynomial::variable(4, i); };
  Polynomial det = x(0) * x(3) - x(1) * x(2) - Polynomial::constant(4, 1);
  MatrixGroupChart G{"SL2", CoordinateRing::make(vars, {det}), sl2_matrices(), {}};
  MatrixBlock b{{0, 1, 2, 3}, {{x(3), -x(1)}, {-x(2), x(0)}}};
  G.blocks.push_back(b);
  return G;
}

MatrixGroupChart product_group(const std::vector<MatrixGroupChart>& factors,
                               const std::vector<std::string>& suffixes) {
  std::vector<RingPtr> rings;
  std::string name;
  for (const auto& f : factors) {
    rings.push_back(f.ring);
    name += (name.empty() ? "" : "x") + f.name;
  }
  MatrixGroupChart G{name, product_ring(rings, suffixes), factors.at(0).algebra, {}};
  std::size_t offset = 0, total = G.ring->nvars();
  for (const auto& f : factors) {
    if (f.n() != G.n()) throw std::invalid_argument("product_group: block sizes differ");
    for (const auto& b : f.blocks) {
      MatrixBlock nb;
      for (auto v : b.vars) nb.vars.push_back(v + offset);
      for (const auto& row : b.inverse) {
        nb.inverse.emplace_back();
        for (const auto& p : row) nb.inverse.back().push_back(p.embed(total, offset));
      }
      G.blocks.push_back(std::move(nb));
    }
    offset += f.ring->nvars();
  }
  return G;
}

Report check_matrix_group(const MatrixGroupChart& G) {
  Report r(G.name);
  r.run("realization", [&] {
    std::string w;
    return verdict("realization", check_matrix_realization(G.algebra, &w), w);
  });
  r.run("inverse_witness", [&] {
    for (std::size_t b = 0; b < G.blocks.size(); ++b) {
      auto prod = poly_multiply(G.entries(b), G.blocks[b].inverse);
      for (std::size_t i = 0; i < G.n(); ++i)
        for (std::size_t j = 0; j < G.n(); ++j) {
          Polynomial want = i == j ? G.ring->one() : G.ring->zero();
          if (!G.ring->reduce(prod[i][j] - want).is_zero())
            return fail("inverse_witness", "block " + std::to_string(b) + " entry (" + std::to_string(i) + "," +
                                               std::to_string(j) + ")");
        }
    }
    return pass("inverse_witness");
  });
  r.run("fields_tangent", [&] {
    for (std::size_t b = 0; b < G.blocks.size(); ++b)
      for (std::size_t i = 0; i < G.algebra.basis.size(); ++i) {
        const auto& xi = G.algebra.basis[i];
        for (const auto& X : {left_field(G, b, xi), right_field(G, b, xi)})
          if (auto w = ideal_violation(X)) return fail("fields_tangent", *w);
      }
    return pass("fields_tangent");
  });
  return r;
}

namespace {

MultivectorField block_field(const MatrixGroupChart& G, std::size_t block, const PolyMatrix& m) {
  std::vector<Polynomial> comps(G.ring->nvars(), G.ring->zero());
  for (std::size_t r = 0; r < G.n(); ++r)
    for (std::size_t c = 0; c < G.n(); ++c) comps[G.var(block, r, c)] = m[r][c];
  return MultivectorField::vector_field(G.ring, comps);
}

// K with tr(K E_b) = <xi, e_b> for every basis matrix, K in span{E_b^T}.
Matrix trace_representative(const MatrixGroupChart& G, const Vector& xi) {
  const auto& A = G.algebra;
  if (!A.data.form) throw std::invalid_argument("matrix group algebra has no form");
  std::size_t d = A.basis.size(), n = G.n();
  Matrix gram(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      Rational t = 0;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) t += A.basis[a](r, c) * A.basis[b](r, c);
      gram(a, b) = t;
    }
  Vector rhs(d);
  for (std::size_t b = 0; b < d; ++b) rhs[b] = bilinear(xi, *A.data.form, unit(d, b));
  auto k = solve(gram, rhs);
  if (!k) throw std::invalid_argument("form is not representable by a trace pairing");
  Matrix K(n, n);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) K(r, c) += (*k)[a] * A.basis[a](c, r);
  return K;
}

OneForm trace_form(const MatrixGroupChart& G, std::size_t block, const PolyMatrix& m) {
  OneForm out(G.ring->nvars(), G.ring->zero());
  for (std::size_t r = 0; r < G.n(); ++r)
    for (std::size_t c = 0; c < G.n(); ++c) out[G.var(block, r, c)] = G.ring->reduce(m[c][r]);
  return out;
}

}  // namespace

MultivectorField left_field(const MatrixGroupChart& G, std::size_t block, const Matrix& xi) {
  return block_field(G, block, poly_multiply(G.entries(block), poly_constant(xi, G.ring->nvars())));
}

MultivectorField right_field(const MatrixGroupChart& G, std::size_t block, const Matrix& xi) {
  return block_field(G, block, poly_multiply(poly_constant(xi, G.ring->nvars()), G.entries(block)));
}

MultivectorField b_field(const MatrixGroupChart& G, std::size_t block, const Matrix& xi) {
  return (left_field(G, block, xi) + right_field(G, block, xi)) * Rational(1, 2);
}

OneForm theta_left(const MatrixGroupChart& G, std::size_t block, const Vector& xi) {
  auto K = poly_constant(trace_representative(G, xi), G.ring->nvars());
  return trace_form(G, block, poly_multiply(K, G.blocks[block].inverse));
}

OneForm theta_right(const MatrixGroupChart& G, std::size_t block, const Vector& xi) {
  auto K = poly_constant(trace_representative(G, xi), G.ring->nvars());
  return trace_form(G, block, poly_multiply(G.blocks[block].inverse, K));
}

std::vector<MultivectorField> left_frame(const MatrixGroupChart& G) {
  std::vector<MultivectorField> out;
  for (std::size_t b = 0; b < G.blocks.size(); ++b)
    for (const auto& xi : G.algebra.basis) out.push_back(left_field(G, b, xi));
  return out;
}

GAction conjugation_action(const MatrixGroupChart& G) {
  LieAlgebraData L = G.algebra.data;
  for (std::size_t b = 1; b < G.blocks.size(); ++b) L = direct_sum(L, G.algebra.data, 1);
  GAction act{L, {}};
  for (std::size_t b = 0; b < G.blocks.size(); ++b)
    for (const auto& xi : G.algebra.basis) act.rho.push_back(left_field(G, b, xi) - right_field(G, b, xi));
  return act;
}

Polynomial PolyMap::pullback(const Polynomial& f) const {
  return source->reduce(f.substitute(components));
}

OneForm PolyMap::pullback(const OneForm& alpha) const {
  OneForm out(source->nvars(), source->zero());
  for (std::size_t k = 0; k < alpha.size(); ++k) {
    if (alpha[k].is_zero()) continue;
    Polynomial c = pullback(alpha[k]);
    for (std::size_t j = 0; j < source->nvars(); ++j) out[j] += c * components[k].derivative(j);
  }
  for (auto& c : out) c = source->reduce(c);
  return out;
}

Report check_polymap(const PolyMap& f) {
  Report r("map");
  r.run("arity", [&] {
    return verdict("arity", f.components.size() == f.target->nvars(),
                   std::to_string(f.components.size()) + " components for " + std::to_string(f.target->nvars()) +
                       " target coordinates");
  });
  r.run("ideal_preserved", [&] {
    for (const auto& g : f.target->ideal_generators())
      if (!f.pullback(g).is_zero())
        return fail("ideal_preserved", "pullback of " + f.target->print(g) + " = " + f.source->print(f.pullback(g)));
    return pass("ideal_preserved");
  });
  return r;
}

PolyMap compose(const PolyMap& g, const PolyMap& f) {
  PolyMap out{f.source, g.target, {}};
  for (const auto& c : g.components) out.components.push_back(f.pullback(c));
  return out;
}

std::vector<MultivectorField> coordinate_frame(RingPtr ring) {
  std::vector<MultivectorField> out;
  for (std::size_t i = 0; i < ring->nvars(); ++i) out.push_back(MultivectorField::coordinate(ring, i));
  return out;
}

std::vector<MultivectorField> GeneratorFamily::all() const {
  auto out = functions;
  out.insert(out.end(), fields.begin(), fields.end());
  return out;
}

GeneratorFamily generator_family(RingPtr ring, const std::vector<MultivectorField>& frame,
                                 const std::vector<std::string>& frame_names) {
  GeneratorFamily g;
  for (std::size_t i = 0; i < ring->nvars(); ++i) {
    g.functions.push_back(MultivectorField::function(ring, ring->var(i)));
    g.names.push_back(ring->vars()[i]);
  }
  for (std::size_t i = 0; i < frame.size(); ++i) {
    g.fields.push_back(frame[i]);
    g.names.push_back(i < frame_names.size() ? frame_names[i] : "X" + std::to_string(i));
  }
  return g;
}

}  // namespace qpg
