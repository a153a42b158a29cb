#pragma once

#include "qpg/lie.hpp"
#include "qpg/linalg.hpp"
#include "qpg/report.hpp"
#include "qpg/ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qpg {

// Multivector field on an affine chart: coefficient polynomials indexed by
// strictly increasing tuples of coordinate indices (theta_i = d/dx_i).
class MultivectorField {
 public:
  using Index = std::vector<std::uint32_t>;
  using Terms = std::map<Index, Polynomial>;

  MultivectorField() = default;
  explicit MultivectorField(RingPtr ring) : ring_(std::move(ring)) {}

  static MultivectorField function(RingPtr ring, const Polynomial& f);
  // The coordinate vector field d/dx_i.
  static MultivectorField coordinate(RingPtr ring, std::size_t i);
  static MultivectorField vector_field(RingPtr ring, const std::vector<Polynomial>& components);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::vector<std::size_t> degrees() const;
  // Exterior degree; throws if mixed (zero has degree 0).
  std::size_t degree() const;

  // Adds c * theta_{idx} for an arbitrary index order (sign applied, repeats dropped).
  void add_term(Index idx, const Polynomial& c);
  Polynomial coefficient(const Index& idx) const;
  // Components of a vector field, one per coordinate.
  std::vector<Polynomial> components() const;
  Polynomial function_part() const { return coefficient({}); }

  MultivectorField& operator+=(const MultivectorField& o);
  MultivectorField& operator-=(const MultivectorField& o);
  friend MultivectorField operator+(MultivectorField a, const MultivectorField& b) { return a += b; }
  friend MultivectorField operator-(MultivectorField a, const MultivectorField& b) { return a -= b; }
  friend MultivectorField operator*(MultivectorField a, const Rational& c);
  friend MultivectorField operator*(const Rational& c, MultivectorField a) { return std::move(a) * c; }
  MultivectorField operator-() const;
  MultivectorField times(const Polynomial& f) const;
  friend bool operator==(const MultivectorField& a, const MultivectorField& b) {
    return a.terms_ == b.terms_;
  }

  // Values of the coefficients at a rational point.
  std::map<Index, Rational> evaluate(const std::vector<Rational>& point) const;
  // Into a product ring whose variables start at `offset`.
  MultivectorField embed(RingPtr target, std::size_t offset) const;
  // Into a ring with the same number of variables, variable i becoming var_map[i].
  MultivectorField relabel(RingPtr target, const std::vector<std::size_t>& var_map) const;

  std::string to_string() const;

 private:
  RingPtr ring_;
  Terms terms_;
};

MultivectorField wedge(const MultivectorField& a, const MultivectorField& b);
// Right derivative with respect to theta_i.
MultivectorField right_derivative(const MultivectorField& a, std::size_t i);
// Schouten-Nijenhuis bracket: [X,f] = X(f), commutator on vector fields.
MultivectorField schouten(const MultivectorField& a, const MultivectorField& b);
// X(f) for a vector field X.
Polynomial apply_field(const MultivectorField& X, const Polynomial& f);
// Residue witness if some ideal generator f has [P,f] outside the ideal.
std::optional<std::string> ideal_violation(const MultivectorField& P);

// One-forms in the coordinate coframe dx_k.
using OneForm = std::vector<Polynomial>;
OneForm differential(const CoordinateRing& ring, const Polynomial& f);
OneForm oneform_add(const OneForm& a, const OneForm& b);
OneForm oneform_scale(const OneForm& a, const Polynomial& f);
// alpha(X) for a vector field X.
Polynomial contract(const OneForm& alpha, const MultivectorField& X);
// pi(alpha, beta) = sum_{i<j} c_ij (alpha_i beta_j - alpha_j beta_i).
Polynomial evaluate_bivector(const MultivectorField& pi, const OneForm& alpha, const OneForm& beta);
// The Hamiltonian map: beta(pi#(alpha)) = pi(beta, alpha), so pi#(df) = [pi, f].
MultivectorField sharp(const MultivectorField& pi, const OneForm& alpha);
bool oneform_is_zero(const CoordinateRing& ring, const OneForm& a);

// Lie algebra action by vector fields, one per basis element.
struct GAction {
  LieAlgebraData algebra;
  std::vector<MultivectorField> rho;
};

MultivectorField rho_of(const GAction& act, const Vector& xi);
// Extension to the exterior algebra as an algebra morphism.
MultivectorField rho_of(const GAction& act, const ExteriorElement& x);
Report check_action(const GAction& act);
GAction trivial_action(const LieAlgebraData& L, RingPtr ring);

// Matrix realization of a Lie algebra; basis[i] is the matrix of e_i.
struct MatrixLieAlgebra {
  LieAlgebraData data;
  std::size_t n = 0;
  std::vector<Matrix> basis;

  Matrix matrix_of(const Vector& xi) const;
};
MatrixLieAlgebra sl2_matrices();
MatrixLieAlgebra so3_matrices();
// The matrices satisfy the structure constants of data.
bool check_matrix_realization(const MatrixLieAlgebra& m, std::string* witness = nullptr);

using PolyMatrix = std::vector<std::vector<Polynomial>>;
PolyMatrix poly_multiply(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix poly_constant(const Matrix& m, std::size_t nvars);

// One n x n block of matrix coordinates inside a chart.
struct MatrixBlock {
  std::vector<std::size_t> vars;  // row-major
  PolyMatrix inverse;             // polynomial witness of X^{-1}
};

// Products of copies of one matrix group inside a coordinate ring.
struct MatrixGroupChart {
  std::string name;
  RingPtr ring;
  MatrixLieAlgebra algebra;
  std::vector<MatrixBlock> blocks;

  std::size_t n() const { return algebra.n; }
  PolyMatrix entries(std::size_t block = 0) const;
  std::size_t var(std::size_t block, std::size_t r, std::size_t c) const {
    return blocks[block].vars[r * n() + c];
  }
};

// SL(2) with entries named prefix11, prefix12, prefix21, prefix22.
MatrixGroupChart sl2_group(const std::string& prefix = "x");
// Block k of the result is block b of factor f, in order.
MatrixGroupChart product_group(const std::vector<MatrixGroupChart>& factors,
                               const std::vector<std::string>& suffixes);
Report check_matrix_group(const MatrixGroupChart& G);

// xi^L = sum (x xi)_ij d/dx_ij, xi^R = sum (xi x)_ij d/dx_ij on one block.
MultivectorField left_field(const MatrixGroupChart& G, std::size_t block, const Matrix& xi);
MultivectorField right_field(const MatrixGroupChart& G, std::size_t block, const Matrix& xi);
// b(xi) = (xi^L + xi^R) / 2.
MultivectorField b_field(const MatrixGroupChart& G, std::size_t block, const Matrix& xi);
// <xi, theta^L> and <xi, theta^R> as one-forms, using the algebra's form.
OneForm theta_left(const MatrixGroupChart& G, std::size_t block, const Vector& xi);
OneForm theta_right(const MatrixGroupChart& G, std::size_t block, const Vector& xi);
// Left-invariant fields of every basis element on every block.
std::vector<MultivectorField> left_frame(const MatrixGroupChart& G);
// Conjugation action of g^{blocks} (block k acted on by copy k).
GAction conjugation_action(const MatrixGroupChart& G);

// Polynomial map source -> target, one component per target coordinate.
struct PolyMap {
  RingPtr source, target;
  std::vector<Polynomial> components;

  Polynomial pullback(const Polynomial& f) const;
  OneForm pullback(const OneForm& alpha) const;
};
// Target ideal generators pull back into the source ideal.
Report check_polymap(const PolyMap& f);
PolyMap compose(const PolyMap& g, const PolyMap& f);  // g after f

// Coordinate vector fields, the tangent generators of a plain affine chart.
std::vector<MultivectorField> coordinate_frame(RingPtr ring);

// Generators used to test derivation identities: coordinates and a family
// of tangent vector fields generating all vector fields.
struct GeneratorFamily {
  std::vector<MultivectorField> functions;
  std::vector<MultivectorField> fields;
  std::vector<std::string> names;
  std::vector<MultivectorField> all() const;
};
GeneratorFamily generator_family(RingPtr ring, const std::vector<MultivectorField>& frame,
                                 const std::vector<std::string>& frame_names = {});

}  // namespace qpg
