#include "qpg/courant.hpp"

#include "qpg/quasi_poisson.hpp"

#include <cstdlib>
#include <functional>
#include <set>
#include <stdexcept>

namespace qpg {

namespace {

using Pair2 = std::pair<std::uint32_t, std::uint32_t>;

Polynomial eta_value(const CourantData& E, std::uint32_t i, std::uint32_t j, std::uint32_t k) {
  if (i == j || j == k || i == k) return E.ring->zero();
  std::array<std::uint32_t, 3> t{i, j, k};
  int sign = 1;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b + 1 < 3 - a; ++b)
      if (t[b] > t[b + 1]) {
        std::swap(t[b], t[b + 1]);
        sign = -sign;
      }
  auto it = E.eta.find(t);
  if (it == E.eta.end()) return E.ring->zero();
  return sign > 0 ? it->second : -it->second;
}

SectionE standard_bracket(const CourantData& E, const SectionE& x, const SectionE& y) {
  const std::size_t n = E.ring->nvars();
  SectionE out = E.zero();
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial v = E.ring->zero(), f = E.ring->zero();
    for (std::size_t i = 0; i < n; ++i) {
      // [X,Y]
      v += x[i] * y[k].derivative(i) - y[i] * x[k].derivative(i);
      // L_X beta
      f += x[i] * y[n + k].derivative(i) + y[n + i] * x[i].derivative(k);
      // - i_Y d alpha
      f -= y[i] * (x[n + k].derivative(i) - x[n + i].derivative(k));
      // i_Y i_X eta
      for (std::size_t j = 0; j < n && !E.eta.empty(); ++j) {
        Polynomial e = eta_value(E, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k));
        if (!e.is_zero()) f += x[i] * y[j] * e;
      }
    }
    out[k] = E.ring->reduce(v);
    out[n + k] = E.ring->reduce(f);
  }
  return out;
}

SectionE action_bracket(const CourantData& E, const SectionE& x, const SectionE& y) {
  const auto& d = E.action->algebra;
  const std::size_t r = E.rank();
  SectionE out = E.zero();
  for (std::size_t a = 0; a < r; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < r; ++b) {
      if (y[b].is_zero()) continue;
      Polynomial fg = x[a] * y[b];
      for (std::size_t c = 0; c < r; ++c)
        if (d.c[a][b][c] != 0) out[c] += fg * d.c[a][b][c];
    }
  }
  auto ax = anchor_of(E, x), ay = anchor_of(E, y);
  for (std::size_t b = 0; b < r; ++b) {
    out[b] += apply_field(ax, y[b]);
    out[b] -= apply_field(ay, x[b]);
  }
  // a*(<dX, Y>) with <dX, Y> = sum_ab B_ab g_b df_a.
  OneForm alpha(E.ring->nvars(), E.ring->zero());
  for (std::size_t a = 0; a < r; ++a) {
    if (x[a].is_zero()) continue;
    Polynomial w = E.ring->zero();
    for (std::size_t b = 0; b < r; ++b)
      if (E.pairing(a, b) != 0) w += y[b] * E.pairing(a, b);
    if (w.is_zero()) continue;
    alpha = oneform_add(alpha, oneform_scale(differential(*E.ring, x[a]), w));
  }
  out = section_add(out, anchor_dual(E, alpha));
  for (auto& p : out) p = E.ring->reduce(p);
  return out;
}

std::vector<Vector> evaluate_rows(const std::vector<SectionE>& rows, const std::vector<Rational>& point) {
  std::vector<Vector> out;
  for (const auto& r : rows) {
    Vector v;
    for (const auto& p : r) v.push_back(p.evaluate(point));
    out.push_back(v);
  }
  return out;
}

// Columns on which every row is constant and the rows are independent.
std::optional<std::pair<std::vector<std::size_t>, Matrix>> constant_block(const std::vector<SectionE>& rows,
                                                                          std::size_t rank) {
  const std::size_t k = rows.size();
  std::vector<std::size_t> chosen;
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < rank && chosen.size() < k; ++c) {
    bool constant = true;
    Vector col;
    for (const auto& r : rows) {
      if (!r[c].is_constant()) {
        constant = false;
        break;
      }
      col.push_back(r[c].constant_term());
    }
    if (!constant || is_zero(col)) continue;
    auto trial = cols;
    trial.push_back(col);
    if (rank_of(trial, k) == trial.size()) {
      cols = trial;
      chosen.push_back(c);
    }
  }
  if (chosen.size() != k) return std::nullopt;
  Matrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = cols[j][i];
  auto inv = inverse(m);
  if (!inv) return std::nullopt;
  return std::make_pair(chosen, *inv);
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::uint32_t degree) {
  std::vector<Monomial> out;
  Monomial m(nvars, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t v, std::uint32_t left) {
    if (v == nvars) {
      out.push_back(m);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      m[v] = e;
      rec(v + 1, left - e);
    }
    m[v] = 0;
  };
  rec(0, degree);
  return out;
}

bool lagrangian_in(const Subspace& S, const Matrix& form, std::size_t dim, std::string* witness) {
  for (std::size_t i = 0; i < S.size(); ++i)
    for (std::size_t j = i; j < S.size(); ++j)
      if (bilinear(S[i], form, S[j]) != 0) {
        if (witness) *witness = "pairing of basis vectors " + std::to_string(i) + ", " + std::to_string(j) + " is nonzero";
        return false;
      }
  if (2 * rank_of(S, dim) != dim) {
    if (witness) *witness = "dimension " + std::to_string(rank_of(S, dim)) + " is not half of " + std::to_string(dim);
    return false;
  }
  return true;
}

Matrix block_form(const Matrix& a, const Matrix& b, int sign_b) {
  const std::size_t n = a.rows(), m = b.rows();
  Matrix out(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(n + i, n + j) = b(i, j) * sign_b;
  return out;
}

}  // namespace

SectionE CourantData::unit(std::size_t a) const {
  SectionE s = zero();
  s[a] = ring->one();
  return s;
}

CourantData standard_courant(RingPtr ring, std::map<CourantData::Triple, Polynomial> eta, std::string name) {
  const std::size_t n = ring->nvars();
  CourantData E;
  E.name = name.empty() ? "T" + std::to_string(n) : std::move(name);
  E.kind = CourantData::Kind::standard;
  E.ring = ring;
  E.pairing = Matrix(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    E.pairing(i, n + i) = 1;
    E.pairing(n + i, i) = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    E.anchor.push_back(MultivectorField::coordinate(ring, i));
    E.frame_names.push_back("d/d" + ring->vars()[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    E.anchor.push_back(MultivectorField(ring));
    E.frame_names.push_back("d" + ring->vars()[i]);
  }
  for (auto& [t, c] : eta) {
    if (!(t[0] < t[1] && t[1] < t[2]) || t[2] >= n) throw std::invalid_argument("eta index triple must be increasing and in range");
    if (!c.is_zero()) E.eta[t] = ring->reduce(c);
  }
  return E;
}

CourantData action_courant(const GAction& act, std::string name) {
  const auto& d = act.algebra;
  if (!d.form) throw std::invalid_argument("action Courant algebroid needs the form of d");
  CourantData E;
  E.name = name.empty() ? d.name : std::move(name);
  E.kind = CourantData::Kind::action;
  E.ring = act.rho.at(0).ring();
  E.pairing = *d.form;
  E.anchor = act.rho;
  E.frame_names = d.basis;
  E.action = act;
  return E;
}

Report validate_courant(const CourantData& E) {
  Report r("courant:" + E.name);
  r.add(verdict("pairing_symmetric", E.pairing.is_symmetric()));
  r.add(verdict("pairing_nondegenerate", determinant(E.pairing) != 0));
  if (E.kind == CourantData::Kind::standard) {
    r.run("eta_closed", [&] {
      const std::size_t n = E.ring->nvars();
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
          for (std::uint32_t k = j + 1; k < n; ++k)
            for (std::uint32_t l = k + 1; l < n; ++l) {
              Polynomial v = eta_value(E, j, k, l).derivative(i) - eta_value(E, i, k, l).derivative(j) +
                             eta_value(E, i, j, l).derivative(k) - eta_value(E, i, j, k).derivative(l);
              v = E.ring->reduce(v);
              if (!v.is_zero())
                return fail("eta_closed", "(d eta)_" + std::to_string(i) + std::to_string(j) + std::to_string(k) +
                                              std::to_string(l) + " = " + E.ring->print(v));
            }
      return pass("eta_closed");
    });
  } else {
    r.add_all(check_action(*E.action), "action.");
    auto co = check_coisotropic_stabilizers(*E.action, E.action->algebra.s_tensor(), {});
    r.add_all(co.report, "");
  }
  return r;
}

Polynomial pair(const CourantData& E, const SectionE& a, const SectionE& b) {
  Polynomial out = E.ring->zero();
  for (std::size_t i = 0; i < E.rank(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < E.rank(); ++j)
      if (E.pairing(i, j) != 0 && !b[j].is_zero()) out += a[i] * b[j] * E.pairing(i, j);
  }
  return E.ring->reduce(out);
}

MultivectorField anchor_of(const CourantData& E, const SectionE& s) {
  MultivectorField out(E.ring);
  for (std::size_t a = 0; a < E.rank(); ++a)
    if (!s[a].is_zero() && !E.anchor[a].is_zero()) out += E.anchor[a].times(s[a]);
  return out;
}

SectionE anchor_dual(const CourantData& E, const OneForm& alpha) {
  // Coefficients c with <c, e_b> = alpha(a(e_b)), i.e. c = B^{-1} v.
  auto inv = inverse(E.pairing);
  if (!inv) throw std::invalid_argument("degenerate pairing");
  std::vector<Polynomial> v;
  for (std::size_t b = 0; b < E.rank(); ++b) v.push_back(contract(alpha, E.anchor[b]));
  SectionE out = E.zero();
  for (std::size_t c = 0; c < E.rank(); ++c)
    for (std::size_t b = 0; b < E.rank(); ++b)
      if ((*inv)(c, b) != 0 && !v[b].is_zero()) out[c] += v[b] * (*inv)(c, b);
  for (auto& p : out) p = E.ring->reduce(p);
  return out;
}

SectionE courant_bracket(const CourantData& E, const SectionE& x, const SectionE& y) {
  if (x.size() != E.rank() || y.size() != E.rank()) throw std::invalid_argument("section rank mismatch");
  return E.kind == CourantData::Kind::standard ? standard_bracket(E, x, y) : action_bracket(E, x, y);
}

SectionE section_add(const SectionE& a, const SectionE& b) {
  SectionE out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

SectionE section_scale(const SectionE& a, const Polynomial& f) {
  SectionE out;
  for (const auto& p : a) out.push_back(p * f);
  return out;
}

bool section_is_zero(const CourantData& E, const SectionE& s) {
  for (const auto& p : s)
    if (!E.ring->reduce(p).is_zero()) return false;
  return true;
}

std::string section_to_string(const CourantData& E, const SectionE& s) {
  std::string out;
  for (std::size_t a = 0; a < s.size(); ++a) {
    Polynomial p = E.ring->reduce(s[a]);
    if (p.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + E.ring->print(p) + ")*" + E.frame_names[a];
  }
  return out.empty() ? "0" : out;
}

std::vector<SectionE> generating_sections(const CourantData& E, bool with_multiples) {
  std::vector<SectionE> out;
  for (std::size_t a = 0; a < E.rank(); ++a) out.push_back(E.unit(a));
  if (with_multiples)
    for (std::size_t a = 0; a < E.rank(); ++a)
      for (std::size_t v = 0; v < E.ring->nvars(); ++v) out.push_back(section_scale(E.unit(a), E.ring->var(v)));
  return out;
}

Report check_courant_axioms(const CourantData& E, const std::vector<SectionE>& family) {
  Report r("courant_axioms:" + E.name);
  const std::size_t m = family.size();
  std::vector<std::vector<SectionE>> br(m, std::vector<SectionE>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) br[i][j] = courant_bracket(E, family[i], family[j]);
  r.run("C1", [&] {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k) {
          auto lhs = courant_bracket(E, family[i], br[j][k]);
          auto rhs = section_add(courant_bracket(E, br[i][j], family[k]), courant_bracket(E, family[j], br[i][k]));
          SectionE diff = section_add(lhs, section_scale(rhs, E.ring->constant(-1)));
          if (!section_is_zero(E, diff))
            return fail("C1", "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                                  "): " + section_to_string(E, diff));
        }
    return pass("C1");
  });
  r.run("C2", [&] {
    for (std::size_t i = 0; i < m; ++i) {
      auto X = anchor_of(E, family[i]);
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = j; k < m; ++k) {
          Polynomial lhs = apply_field(X, pair(E, family[j], family[k]));
          Polynomial rhs = pair(E, br[i][j], family[k]) + pair(E, family[j], br[i][k]);
          Polynomial diff = E.ring->reduce(lhs - rhs);
          if (!diff.is_zero())
            return fail("C2", "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) +
                                  "): " + E.ring->print(diff));
        }
    }
    return pass("C2");
  });
  r.run("C3", [&] {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j) {
        auto lhs = section_add(br[i][j], br[j][i]);
        auto rhs = anchor_dual(E, differential(*E.ring, pair(E, family[i], family[j])));
        SectionE diff = section_add(lhs, section_scale(rhs, E.ring->constant(-1)));
        if (!section_is_zero(E, diff))
          return fail("C3", "(" + std::to_string(i) + "," + std::to_string(j) + "): " + section_to_string(E, diff));
      }
    return pass("C3");
  });
  return r;
}

std::size_t degree_cap() {
  if (const char* env = std::getenv("QPG_DEGREE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
    }
  }
  return 6;
}

Membership in_module_span(const CourantData& E, const std::vector<SectionE>& rows, const SectionE& s) {
  if (section_is_zero(E, s)) return Membership::member;
  if (rows.empty()) return Membership::not_member;
  if (auto block = constant_block(rows, E.rank())) {
    const auto& [cols, inv] = *block;
    const std::size_t k = rows.size();
    SectionE residual = s;
    for (std::size_t i = 0; i < k; ++i) {
      Polynomial c = E.ring->zero();
      for (std::size_t j = 0; j < k; ++j)
        if (inv(j, i) != 0) c += s[cols[j]] * inv(j, i);
      residual = section_add(residual, section_scale(rows[i], -c));
    }
    return section_is_zero(E, residual) ? Membership::member : Membership::not_member;
  }
  const std::size_t n = E.ring->nvars();
  const std::size_t cap = degree_cap();
  for (std::uint32_t deg = 0; deg <= cap; ++deg) {
    auto monos = monomials_up_to(n, deg);
    // Unknown u_{i,m}: coefficient of x^m in the multiplier of row i.
    std::vector<SectionE> columns;
    for (const auto& row : rows)
      for (const auto& m : monos) {
        SectionE col;
        for (const auto& p : row) col.push_back(E.ring->reduce(p.mul_monomial(m, 1)));
        columns.push_back(col);
      }
    std::map<std::pair<std::size_t, Monomial>, std::size_t> eq;
    auto index_terms = [&](const SectionE& sec) {
      for (std::size_t a = 0; a < sec.size(); ++a)
        for (const auto& [mono, c] : sec[a].terms()) eq.emplace(std::make_pair(a, mono), eq.size());
    };
    for (const auto& col : columns) index_terms(col);
    SectionE target;
    for (const auto& p : s) target.push_back(E.ring->reduce(p));
    index_terms(target);
    Matrix A(eq.size(), columns.size());
    Vector b(eq.size(), Rational(0));
    for (std::size_t u = 0; u < columns.size(); ++u)
      for (std::size_t a = 0; a < columns[u].size(); ++a)
        for (const auto& [mono, c] : columns[u][a].terms()) A(eq.at({a, mono}), u) = c;
    for (std::size_t a = 0; a < target.size(); ++a)
      for (const auto& [mono, c] : target[a].terms()) b[eq.at({a, mono})] = c;
    if (solve(A, b)) return Membership::member;
  }
  return Membership::inconclusive;
}

Report check_dirac(const DiracData& D, const std::vector<std::vector<Rational>>& points) {
  const auto& E = D.parent;
  Report r("dirac:" + D.name);
  r.run("isotropic", [&] {
    for (std::size_t i = 0; i < D.span.size(); ++i)
      for (std::size_t j = i; j < D.span.size(); ++j) {
        Polynomial v = pair(E, D.span[i], D.span[j]);
        if (!v.is_zero()) return fail("isotropic", "<s" + std::to_string(i) + ", s" + std::to_string(j) + "> = " + E.ring->print(v));
      }
    return pass("isotropic");
  });
  r.run("half_rank", [&] {
    if (2 * D.span.size() != E.rank())
      return fail("half_rank", std::to_string(D.span.size()) + " spanning sections for rank " + std::to_string(E.rank()));
    for (const auto& p : points) {
      if (!E.ring->contains_point(p)) return fail("half_rank", "sample point is not on the variety");
      auto rows = evaluate_rows(D.span, p);
      if (rank_of(rows, E.rank()) != D.span.size()) return fail("half_rank", "rank drops at " + to_string(p));
    }
    return pass("half_rank");
  });
  r.run("involutive", [&] {
    std::vector<SectionE> family = D.span;
    for (const auto& s : D.span)
      for (std::size_t v = 0; v < E.ring->nvars(); ++v) family.push_back(section_scale(s, E.ring->var(v)));
    bool inconclusive = false;
    std::string where;
    for (std::size_t i = 0; i < family.size(); ++i)
      for (std::size_t j = 0; j < family.size(); ++j) {
        auto b = courant_bracket(E, family[i], family[j]);
        auto m = in_module_span(E, D.span, b);
        if (m == Membership::not_member)
          return fail("involutive", "bracket of family members " + std::to_string(i) + ", " + std::to_string(j) + " = " +
                                        section_to_string(E, b) + " leaves the span");
        if (m == Membership::inconclusive && !inconclusive) {
          inconclusive = true;
          where = std::to_string(i) + ", " + std::to_string(j);
        }
      }
    if (inconclusive)
      return CheckResult{"involutive", Status::inconclusive, "membership undecided within the degree cap at " + where, 0};
    return pass("involutive");
  });
  return r;
}

DiracData tangent_dirac(const CourantData& E) {
  DiracData D{E, {}, "TM"};
  for (std::size_t i = 0; i < E.ring->nvars(); ++i) D.span.push_back(E.unit(i));
  return D;
}

DiracData cotangent_dirac(const CourantData& E) {
  DiracData D{E, {}, "T*M"};
  const std::size_t n = E.ring->nvars();
  for (std::size_t i = 0; i < n; ++i) D.span.push_back(E.unit(n + i));
  return D;
}

DiracData graph_of_bivector(const CourantData& E, const MultivectorField& pi) {
  DiracData D{E, {}, "graph(pi)"};
  const std::size_t n = E.ring->nvars();
  for (std::size_t k = 0; k < n; ++k) {
    auto X = sharp(pi, differential(*E.ring, E.ring->var(k))).components();
    SectionE s = E.zero();
    for (std::size_t i = 0; i < n; ++i) s[i] = X[i];
    s[n + k] = E.ring->one();
    D.span.push_back(s);
  }
  return D;
}

DiracData graph_of_two_form(const CourantData& E, const std::map<Pair2, Polynomial>& omega) {
  DiracData D{E, {}, "graph(omega)"};
  const std::size_t n = E.ring->nvars();
  for (std::size_t k = 0; k < n; ++k) {
    SectionE s = E.unit(k);
    // (i_{d/dx_k} omega)_j = omega_kj
    for (const auto& [ij, c] : omega) {
      if (ij.first == k) s[n + ij.second] += c;
      if (ij.second == k) s[n + ij.first] -= c;
    }
    D.span.push_back(s);
  }
  return D;
}

std::map<CourantData::Triple, Polynomial> exterior_derivative(const CoordinateRing& ring,
                                                              const std::map<Pair2, Polynomial>& omega) {
  const std::uint32_t n = static_cast<std::uint32_t>(ring.nvars());
  auto w = [&](std::uint32_t a, std::uint32_t b) -> Polynomial {
    if (a == b) return ring.zero();
    auto it = omega.find({std::min(a, b), std::max(a, b)});
    if (it == omega.end()) return ring.zero();
    return a < b ? it->second : -it->second;
  };
  std::map<CourantData::Triple, Polynomial> out;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      for (std::uint32_t k = j + 1; k < n; ++k) {
        Polynomial v = w(j, k).derivative(i) - w(i, k).derivative(j) + w(i, j).derivative(k);
        v = ring.reduce(v);
        if (!v.is_zero()) out[{i, j, k}] = v;
      }
  return out;
}

DiracData cartan_dirac(const MatrixGroupChart& G) {
  const auto& g = G.algebra.data;
  auto d = direct_sum(g, g, -1, "d");
  GAction act{d, {}};
  for (std::size_t i = 0; i < g.dim(); ++i) act.rho.push_back(-right_field(G, 0, G.algebra.basis[i]));
  for (std::size_t i = 0; i < g.dim(); ++i) act.rho.push_back(left_field(G, 0, G.algebra.basis[i]));
  auto E = action_courant(act, "A_" + G.name);
  DiracData D{E, {}, "E_" + G.name};
  for (std::size_t i = 0; i < g.dim(); ++i) {
    SectionE s = E.zero();
    s[i] = E.ring->one();
    s[g.dim() + i] = E.ring->one();
    D.span.push_back(s);
  }
  return D;
}

LinearManinResult check_manin_pair_morphism_linear(const LinearManinMorphism& M) {
  LinearManinResult out;
  out.report = Report("manin_pair_morphism");
  auto& r = out.report;
  const std::size_t n1 = M.E1.dim(), n2 = M.E2.dim();
  if (!M.E1.form || !M.E2.form) {
    r.add(fail("forms", "both algebras need their forms"));
    return out;
  }
  std::string w;
  r.add(verdict("A1_lagrangian", lagrangian_in(M.A1, *M.E1.form, n1, &w), w));
  r.add(verdict("A1_subalgebra", is_lie_subalgebra(M.E1, M.A1, &w), w));
  r.add(verdict("A2_lagrangian", lagrangian_in(M.A2, *M.E2.form, n2, &w), w));
  r.add(verdict("A2_subalgebra", is_lie_subalgebra(M.E2, M.A2, &w), w));
  auto sum = direct_sum(M.E2, M.E1, -1);
  r.add(verdict("K_lagrangian", lagrangian_in(M.K, block_form(*M.E2.form, *M.E1.form, -1), n1 + n2, &w), w));
  r.add(verdict("K_subalgebra", is_lie_subalgebra(sum, M.K, &w), w));

  // Complement of A1 in E1.
  std::vector<Vector> basis = span_basis(M.A1, n1);
  for (std::size_t i = 0; i < n1; ++i) {
    auto trial = basis;
    trial.push_back(unit(n1, i));
    if (rank_of(trial, n1) == trial.size()) {
      basis = trial;
      out.complement1.push_back(unit(n1, i));
    }
  }
  auto k2 = [&](const Vector& k) { return Vector(k.begin(), k.begin() + n2); };
  auto k1 = [&](const Vector& k) { return Vector(k.begin() + n2, k.end()); };
  const std::size_t nk = M.K.size(), na1 = M.A1.size();
  // Columns: k1 of each K vector, then A1 basis vectors.
  Matrix cols(n1, nk + na1);
  for (std::size_t m = 0; m < nk; ++m) {
    auto v = k1(M.K[m]);
    for (std::size_t i = 0; i < n1; ++i) cols(i, m) = v[i];
  }
  for (std::size_t a = 0; a < na1; ++a)
    for (std::size_t i = 0; i < n1; ++i) cols(i, nk + a) = M.A1[a][i];
  r.run("graph_single_valued", [&] {
    for (const auto& v : nullspace(cols)) {
      Vector img(n2, Rational(0));
      for (std::size_t m = 0; m < nk; ++m) img = add(img, scale(k2(M.K[m]), v[m]));
      if (!in_span(M.A2, img, n2)) return fail("graph_single_valued", "K meets 0 x A1 outside A2 x A1: " + to_string(img));
    }
    return pass("graph_single_valued");
  });
  r.run("graph_surjective", [&] {
    out.phi.clear();
    for (const auto& c : out.complement1) {
      auto sol = solve(cols, c);
      if (!sol) return fail("graph_surjective", "no element of K lies over " + to_string(c));
      Vector img(n2, Rational(0));
      for (std::size_t m = 0; m < nk; ++m) img = add(img, scale(k2(M.K[m]), (*sol)[m]));
      out.phi.push_back(img);
    }
    return pass("graph_surjective");
  });
  r.add(pass("full_over_a_point"));
  out.valid = r.all_passed();
  return out;
}

Vector apply_phi(const LinearManinResult& r, const LinearManinMorphism& M, const Vector& e1) {
  const std::size_t n1 = M.E1.dim(), n2 = M.E2.dim();
  std::vector<Vector> basis = r.complement1;
  for (const auto& a : M.A1) basis.push_back(a);
  Matrix m(n1, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < n1; ++i) m(i, j) = basis[j][i];
  auto c = solve(m, e1);
  if (!c) throw std::invalid_argument("vector outside E1");
  Vector out(n2, Rational(0));
  for (std::size_t j = 0; j < r.phi.size(); ++j) out = add(out, scale(r.phi[j], (*c)[j]));
  return out;
}

}  // namespace qpg
