#pragma once

#include "qpg/graded.hpp"
#include "qpg/linalg.hpp"
#include "qpg/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qpg {

// Finite-dimensional Lie algebra by structure constants c^k_{ij}, with an
// optional invariant symmetric form on g.
struct LieAlgebraData {
  std::string name;
  std::vector<std::string> basis;
  // c[i][j][k] = c^k_{ij}
  std::vector<std::vector<Vector>> c;
  std::optional<Matrix> form;

  LieAlgebraData() = default;
  LieAlgebraData(std::string name, std::vector<std::string> basis);

  std::size_t dim() const { return basis.size(); }
  const Vector& structure(std::size_t i, std::size_t j) const { return c[i][j]; }
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  Vector bracket(const Vector& x, const Vector& y) const;
  // Matrix of ad_x in the basis (column j = [x, e_j]).
  Matrix ad(const Vector& x) const;
  // The tensor s in S^2 g: the inverse of the form (requires nondegenerate form).
  Matrix s_tensor() const;
};

LieAlgebraData abelian_algebra(std::size_t n);
LieAlgebraData so3_algebra();
// Basis h, e, f with the trace form of the defining representation.
LieAlgebraData sl2_algebra();
// g + g' with block form (form, sign * form').
LieAlgebraData direct_sum(const LieAlgebraData& a, const LieAlgebraData& b, int form_sign_b,
                          const std::string& name = {});

Report check_lie_algebra(const LieAlgebraData& L);
bool check_invariant_form(const LieAlgebraData& L, const Matrix& form);
// Invariance of s in S^2 g under the adjoint action.
bool check_invariant_tensor(const LieAlgebraData& L, const Matrix& s);

// Element of the exterior algebra of g: strictly increasing index tuples.
class ExteriorElement {
 public:
  using Index = std::vector<std::uint32_t>;
  using Terms = std::map<Index, Rational>;

  ExteriorElement() = default;
  explicit ExteriorElement(std::size_t dim) : dim_(dim) {}
  static ExteriorElement from_vector(const Vector& v);
  static ExteriorElement basis_element(std::size_t dim, std::size_t i);

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Adds c * e_{i1} ^ ... ^ e_{ik} for an arbitrary index order.
  void add_wedge(Index idx, const Rational& c);
  Rational coefficient(const Index& idx) const;

  ExteriorElement& operator+=(const ExteriorElement& o);
  ExteriorElement& operator-=(const ExteriorElement& o);
  friend ExteriorElement operator+(ExteriorElement a, const ExteriorElement& b) { return a += b; }
  friend ExteriorElement operator-(ExteriorElement a, const ExteriorElement& b) { return a -= b; }
  friend ExteriorElement operator*(ExteriorElement a, const Rational& c);
  friend ExteriorElement operator*(const Rational& c, ExteriorElement a) { return std::move(a) * c; }
  friend bool operator==(const ExteriorElement& a, const ExteriorElement& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  std::vector<std::size_t> degrees() const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t dim_ = 0;
  Terms terms_;
};

ExteriorElement wedge(const ExteriorElement& a, const ExteriorElement& b);
// Biderivation extension of the Lie bracket, |wedge^k| = k - 1.
ExteriorElement gerstenhaber_bracket(const LieAlgebraData& L, const ExteriorElement& a,
                                     const ExteriorElement& b);

// The exterior algebra as a graded algebra (generators of degree 1) with the
// Lie bracket as its degree -1 bracket; an independent route to the bracket.
GradedAlgebraPtr exterior_gerstenhaber_algebra(const LieAlgebraData& L);
GradedElement to_graded(const ExteriorElement& x, const GradedAlgebra& alg);
ExteriorElement from_graded(const GradedElement& x, std::size_t dim);

// phi^{abc} = 1/2 sum s^{bj} s^{ck} c^a_{jk} (s in S^2 g).
ExteriorElement cartan_trivector(const LieAlgebraData& L, const Matrix& s);

struct DualBases {
  std::vector<Vector> e;      // e_i
  std::vector<Vector> e_dual; // e^i = sum_j s^{ij} e_j
};
// Requires the algebra's form; <e_i, e^j> = delta.
DualBases dual_bases(const LieAlgebraData& L);

struct RMatrixReport {
  bool is_r_matrix = false;
  std::vector<ExteriorElement> cobracket;  // delta(e_i) = [u, e_i]
  bool co_jacobi = false;
  bool cocycle = false;
  Report report;
};
RMatrixReport check_r_matrix(const LieAlgebraData& L, const Matrix& s, const ExteriorElement& u);
// Rational c with [c u, c u] = -phi, if one exists.
std::optional<Rational> solve_r_matrix_scale(const LieAlgebraData& L, const Matrix& s,
                                             const ExteriorElement& u);

}  // namespace qpg
