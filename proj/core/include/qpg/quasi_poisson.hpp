#pragma once

#include "qpg/chart.hpp"
#include "qpg/lie.hpp"
#include "qpg/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qpg {

// (M, rho, pi) together with the element s of S^2 g and a family of tangent
// vector fields generating all vector fields on M.
struct QPSpace {
  std::string name;
  GAction action;
  Matrix s;
  MultivectorField pi;
  std::vector<MultivectorField> frame;

  const RingPtr& ring() const { return pi.ring(); }
  const LieAlgebraData& algebra() const { return action.algebra; }
};

// s defaults to the inverse of the algebra's form; frame defaults to the
// coordinate vector fields.
QPSpace make_space(std::string name, GAction action, MultivectorField pi,
                   std::vector<MultivectorField> frame = {});

// rho(e^i) with e^i = sum_j s^{ij} e_j.
std::vector<MultivectorField> dual_fields(const QPSpace& M);
MultivectorField rho_phi(const QPSpace& M);

// Action, [pi,pi] = rho(phi), [pi, rho(xi)] = 0, tangency of pi.
Report check_quasi_poisson(const QPSpace& M);

struct CoisotropicResult {
  bool generic = false;             // rho(phi) = 0
  std::vector<bool> pointwise;      // s#(g_x^perp) inside g_x
  Report report;
};
CoisotropicResult check_coisotropic_stabilizers(const GAction& act, const Matrix& s,
                                                const std::vector<std::vector<Rational>>& points);

// d(P) = pi_sign [pi, P] + 1/2 sum rho(e^i) ^ [rho(e_i), P]. The printed
// differential has pi_sign = +1; the one whose anchor is pi# + 1/2 rho rho^*
// (pi# Hamiltonian) has pi_sign = -1.
MultivectorField cotangent_differential(const QPSpace& M, const MultivectorField& P, int pi_sign = 1);
// d^2 = 0 and [rho(xi), d] = 0 on coordinates and frame fields.
Report check_cotangent_differential(const QPSpace& M, int pi_sign = 1);

// a(alpha) = pi#(alpha) + 1/2 sum alpha(rho(e_i)) rho(e^i).
MultivectorField anchor(const QPSpace& M, const OneForm& alpha);
// A(k, j) = a(dx_j)(x_k).
PolyMatrix anchor_matrix(const QPSpace& M);
// Bracket on one-forms whose anchor is `anchor`.
OneForm oneform_bracket(const QPSpace& M, const OneForm& alpha, const OneForm& beta);
// Equality of one-forms on M: pairings with every frame field agree modulo the ideal.
bool oneforms_equal(const QPSpace& M, const OneForm& a, const OneForm& b);
// The anchor and bracket reproduce the anchor-compatible differential.
Report check_bracket_anchor(const QPSpace& M);

struct QuasiSymplecticResult {
  Status generic = Status::inconclusive;
  std::vector<bool> pointwise;
  Report report;
};
QuasiSymplecticResult check_quasi_symplectic(const QPSpace& M,
                                             const std::vector<std::vector<Rational>>& points);
// Rank of the anchor and dimension of M at a point of the variety.
std::pair<std::size_t, std::size_t> anchor_rank_at(const QPSpace& M, const std::vector<Rational>& point);

// Hamiltonian space: moment map into a product of copies of a matrix group,
// block k carrying the conjugation action of copy k of g.
struct HamiltonianSpace {
  QPSpace space;
  MatrixGroupChart group;
  PolyMap moment;
};

Report check_moment_map(const HamiltonianSpace& H);
// i(xi) = Phi^*<xi, theta^L>, summed over blocks.
OneForm i_map(const HamiltonianSpace& H, const Vector& xi);
// -Phi^*<xi, theta^R>: the map intertwining the anchor of the printed differential.
OneForm i_map_printed(const HamiltonianSpace& H, const Vector& xi);
// a o i = rho, i a Lie algebra morphism, and rho_x(g) + pi#_x(T*M) = a(T*M) at the points.
Report check_i_map(const HamiltonianSpace& H, const std::vector<std::vector<Rational>>& points);

// Product with the action of g1 + g2 (forms summed with sign +1).
QPSpace product(const QPSpace& a, const QPSpace& b, const std::vector<std::string>& suffixes = {"_1", "_2"});
// Same space on a larger ring whose variables start at `offset`.
QPSpace embed(const QPSpace& M, const RingPtr& ring, std::size_t offset);
// Fusion of a g + g space to the diagonal g; with_psi = false drops rho(psi).
QPSpace fuse(const QPSpace& M, const LieAlgebraData& g, bool with_psi = true);
// Moment map (Phi1, Phi2) to G x G becomes Phi1 Phi2 to the single-block `base`.
HamiltonianSpace fuse(const HamiltonianSpace& H, const MatrixGroupChart& base, bool with_psi = true);
// Product with moment map into G x G (both factors over single-block groups).
HamiltonianSpace product(const HamiltonianSpace& a, const HamiltonianSpace& b,
                         const std::vector<std::string>& suffixes = {"_1", "_2"});
HamiltonianSpace fusion_product(const HamiltonianSpace& a, const HamiltonianSpace& b, bool with_psi = true,
                                const std::vector<std::string>& suffixes = {"_1", "_2"});

// Group action on M2 used by the braiding: (g, x) -> g . x as polynomials in
// the entries of g and the coordinates x.
using GroupActionFn = std::function<std::vector<Polynomial>(const PolyMatrix& g, const std::vector<Polynomial>& x)>;
// Conjugation x -> g x g^{-1}; rho(xi) = xi^L - xi^R is d/dt exp(-t xi) . x.
GroupActionFn conjugation_group_action(const MatrixGroupChart& G);
// (x1, x2) -> (Phi1(x1) . x2, x1) from M1 (*) M2 to M2 (*) M1.
PolyMap braiding_map(const HamiltonianSpace& a, const HamiltonianSpace& b, const GroupActionFn& act,
                     const RingPtr& target);

// Relatedness of bivectors (negated target bivector when anti) and of actions.
Report check_qp_morphism(const PolyMap& f, const QPSpace& source, const QPSpace& target, bool anti = false);

// pi' = pi + rho(u); reports [pi', pi'] = 0.
struct TwistResult {
  MultivectorField pi;
  Report report;
};
TwistResult twist_by_r_matrix(const QPSpace& M, const ExteriorElement& u);

// pi(df, dg) lies in the ideal of S for all ideal generators f, g of S; S has
// the variables of pi's chart and an ideal containing the chart ideal.
Report check_coisotropic_subvariety(const MultivectorField& pi, const RingPtr& S);

// Fused differential identity and the J chain-map check for a fusion product
// of two Hamiltonian spaces over a single-block group.
struct FusionAlgebroidOptions {
  bool drop_correction = false;
};
Report check_fusion_algebroid(const HamiltonianSpace& a, const HamiltonianSpace& b,
                              FusionAlgebroidOptions opts = {});

}  // namespace qpg
