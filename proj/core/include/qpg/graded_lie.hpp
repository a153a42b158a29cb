#pragma once

#include "qpg/lie.hpp"
#include "qpg/linalg.hpp"
#include "qpg/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qpg {

// Finite-dimensional Z-graded Lie algebra with a homogeneous basis, a dense
// bracket table and an optional pairing that is nonzero only between degrees
// summing to pairing_degree_sum.
class GradedLieAlgebra {
 public:
  GradedLieAlgebra() = default;
  GradedLieAlgebra(std::string name, std::vector<std::string> names, std::vector<int> degrees);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int degree(std::size_t i) const { return degrees_[i]; }
  std::size_t index_of(const std::string& name) const;

  // Sets [e_i, e_j] and fills [e_j, e_i] by graded antisymmetry.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  const Vector& table(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  Vector bracket(const Vector& a, const Vector& b) const;
  Vector basis(std::size_t i) const { return unit(dim(), i); }

  void set_pairing(Matrix m, int degree_sum = -1);
  const std::optional<Matrix>& pairing() const { return pairing_; }
  int pairing_degree_sum() const { return pairing_degree_sum_; }
  Rational pair(const Vector& a, const Vector& b) const;

  std::string to_string(const Vector& v) const;

 private:
  std::string name_;
  std::vector<std::string> names_;
  std::vector<int> degrees_;
  std::vector<Vector> table_;
  std::optional<Matrix> pairing_;
  int pairing_degree_sum_ = -1;
};

// Antisymmetry, homogeneity, Jacobi and (if present) pairing symmetry,
// degree, invariance and nondegeneracy, exhaustively over basis triples.
Report check_graded_lie(const GradedLieAlgebra& A);

// g-hat: generators I_i (degree -1), L_i (degree 0), D (degree 1).
GradedLieAlgebra build_ghat(const LieAlgebraData& L);
// Q(g): T (degree -2), I_i, L_i, D with cocycle <u,v>T and pairing <T,D>=1,
// <I_u,L_v>=<u,v>. Uses the form of L.
GradedLieAlgebra build_Q(const LieAlgebraData& L);
// Q_s(f): T, alpha^i (dual basis, degree -1), xi_i (degree 0), D.
GradedLieAlgebra build_Qs(const LieAlgebraData& F, const Matrix& s);

// Index helpers for Q(g) built by build_Q: T, I_0..I_{n-1}, L_0..L_{n-1}, D.
struct QIndex {
  std::size_t n;
  std::size_t T() const { return 0; }
  std::size_t I(std::size_t i) const { return 1 + i; }
  std::size_t L(std::size_t i) const { return 1 + n + i; }
  std::size_t D() const { return 1 + 2 * n; }
  std::size_t dim() const { return 2 * n + 2; }
  Vector I_of(const Vector& u) const;
  Vector L_of(const Vector& u) const;
};

using Subspace = std::vector<Vector>;

Subspace span_of(const GradedLieAlgebra& A, const std::vector<std::string>& names);
bool is_subalgebra(const GradedLieAlgebra& A, const Subspace& S, std::string* witness = nullptr);
bool is_ideal(const GradedLieAlgebra& A, const Subspace& S, std::string* witness = nullptr);
bool is_graded_subspace(const GradedLieAlgebra& A, const Subspace& S);

Report check_manin_triple(const GradedLieAlgebra& D, const Subspace& A, const Subspace& B);

// The Manin triple of Q(g): (Q(g), R T + g[1], g + R D).
struct ManinTripleData {
  GradedLieAlgebra algebra;
  Subspace A, B;
};
ManinTripleData q_manin_triple(const LieAlgebraData& L);
// The pair of Lagrangian subalgebras of Q(d), d = g + g-bar:
// A = R T + I(g x 0) + L(0 x g), B = I(diag) + L(diag) + R D.
ManinTripleData qd_lagrangian_pair(const LieAlgebraData& L);

// Graph of r-hat inside Q(d), computed from r-hat = sum I_{e^i} (x) L_{e_i}.
Subspace rhat_graph(const LieAlgebraData& L, const GradedLieAlgebra& Qd);
struct RHatResult {
  bool is_ideal = false;
  bool control_rejected = false;
  std::string witness;
  Report report;
};
// The graph must be an ideal; a tilted subspace must not be.
RHatResult check_rhat_quasitriangular(const LieAlgebraData& L);

struct GeneralizedManinTriple {
  LieAlgebraData f;
  Matrix s;  // element of S^2 f, possibly degenerate
  Subspace h, k;
};
struct GeneralizedManinTripleResult {
  bool valid = false;
  bool transitive = false;
  bool exact = false;
  // s nondegenerate and k Lagrangian for the form s^{-1}.
  bool criterion = false;
  Report report;
};
GeneralizedManinTripleResult check_generalized_manin_triple(const GeneralizedManinTriple& T);

// Subalgebra test for Lie algebras given by structure constants.
bool is_lie_subalgebra(const LieAlgebraData& L, const Subspace& S, std::string* witness = nullptr);

struct QPGroupQuadruple {
  LieAlgebraData g;  // with form
  LieAlgebraData f;  // with form
  Subspace h, hstar;
  Matrix rho;  // dim f x dim g, column i = rho(e_i)
};
struct QPGroupQuadrupleResult {
  Report report;
  // Basis of K inside d + f-bar, d = g + g-bar; coordinates (g, g, f).
  Subspace K;
  Matrix rho_star;  // dim g x dim f, <rho* x, xi>_g = <x, rho xi>_f
};
QPGroupQuadrupleResult check_qp_group_quadruple(const QPGroupQuadruple& Q);

}  // namespace qpg
