#pragma once

#include "qpg/chart.hpp"
#include "qpg/graded.hpp"
#include "qpg/lie.hpp"
#include "qpg/quasi_poisson.hpp"
#include "qpg/report.hpp"

#include <string>
#include <vector>

namespace qpg {

// Lie algebroid with a global frame a_1..a_r over a chart. Gamma(wedge A) is the
// graded algebra generated by the chart coordinates (degree 0) and the a_i
// (degree 1), with [a_i, a_j] = c^k_ij a_k and [a_i, f] = anchor_i(f).
struct LieAlgebroidFrame {
  std::string name;
  RingPtr ring;
  std::vector<MultivectorField> anchor;
  std::vector<std::vector<std::vector<Polynomial>>> c;  // c[i][j][k]
  GradedAlgebraPtr algebra;

  std::size_t rank() const { return anchor.size(); }
  std::size_t section_gen(std::size_t i) const { return ring->nvars() + i; }
  GradedElement section(std::size_t i) const { return algebra->gen(section_gen(i)); }
  GradedElement function(const Polynomial& f) const;
};

LieAlgebroidFrame make_algebroid(std::string name, RingPtr ring, std::vector<MultivectorField> anchor,
                                 std::vector<std::vector<std::vector<Polynomial>>> c,
                                 std::vector<std::string> section_names = {});
// g over a point (rank dim g, zero anchor).
LieAlgebroidFrame algebra_over_point(const LieAlgebraData& g);
// TM with a frame of vector fields whose brackets are constant combinations
// [X_i, X_j] = c^k_ij X_k.
LieAlgebroidFrame tangent_algebroid(std::string name, RingPtr ring, std::vector<MultivectorField> frame,
                                    const LieAlgebraData& constants);

// Graded Jacobi on generator triples, anchor tangency and anchor compatibility.
Report check_algebroid(const LieAlgebroidFrame& A);

// Frame expansion for TM: a_i maps to the i-th frame field. The coframe
// satisfies coframe[i](frame[j]) = delta_ij; only degrees up to 2 are converted
// back.
MultivectorField to_multivector(const LieAlgebroidFrame& A, const GradedElement& x);
GradedElement from_multivector(const LieAlgebroidFrame& A, const std::vector<OneForm>& coframe,
                               const MultivectorField& P);

struct QPBialgebroid {
  LieAlgebroidFrame A;
  LieAlgebraData g;  // s is the inverse of its form
  std::vector<GradedElement> rho;  // rho(e_i) as sections of A
  DerivationRules D;               // degree +1, on every generator
};

GradedElement apply_D(const QPBialgebroid& B, const GradedElement& x);
GradedElement rho_of(const QPBialgebroid& B, const ExteriorElement& x);
// D = [P, .] for a degree-2 element P.
DerivationRules hamiltonian_rules(const LieAlgebroidFrame& A, const GradedElement& P);

// rho a Lie morphism, D a derivation of the bracket preserving the relations,
// D rho(xi) = 0 and D^2 = 1/2 [rho(phi), .] on generators.
Report check_qp_bialgebroid(const QPBialgebroid& B);

// d_{A*} = D + 1/2 sum rho(e^i) [rho(e_i), .].
GradedElement dual_differential(const QPBialgebroid& B, const GradedElement& x);
// pi_D(dx_k, dx_l) = a(D x_l)(x_k).
MultivectorField induced_bivector(const QPBialgebroid& B);
// The action a o rho on the base.
GAction induced_action(const QPBialgebroid& B);
// d_{A*}^2 = 0, mu_rho chain map d_{A*} rho(e^k) = -1/2 c^k_ij rho(e^i) rho(e^j),
// and the induced structure (a o rho, pi_D) is quasi-Poisson.
Report check_dual_differential(const QPBialgebroid& B, const std::vector<MultivectorField>& frame = {});
// For A = TM: d_{A*} agrees with the cotangent differential of M on coordinates
// and on the frame sections.
Report compare_with_cotangent(const QPBialgebroid& B, const QPSpace& M);

}  // namespace qpg
