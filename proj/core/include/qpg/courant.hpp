#pragma once

#include "qpg/chart.hpp"
#include "qpg/graded_lie.hpp"
#include "qpg/lie.hpp"
#include "qpg/report.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qpg {

// Section of a trivialized bundle: one coefficient per frame element.
using SectionE = std::vector<Polynomial>;

// Trivialized Courant algebroid over a chart with a constant pairing.
// Standard: E = TM + T*M, frame d/dx_1..d/dx_n, dx_1..dx_n, pairing a(Y) + b(X),
// bracket [X,Y] + L_X b - i_Y da + i_Y i_X eta.
// Action: E = M x d with the constant frame of d and anchor rho.
struct CourantData {
  enum class Kind { standard, action };
  using Triple = std::array<std::uint32_t, 3>;

  std::string name;
  Kind kind = Kind::standard;
  RingPtr ring;
  Matrix pairing;
  std::vector<MultivectorField> anchor;
  std::vector<std::string> frame_names;
  std::map<Triple, Polynomial> eta;  // i < j < k
  std::optional<GAction> action;

  std::size_t rank() const { return anchor.size(); }
  SectionE zero() const { return SectionE(rank(), ring->zero()); }
  SectionE unit(std::size_t a) const;
};

CourantData standard_courant(RingPtr ring, std::map<CourantData::Triple, Polynomial> eta = {},
                             std::string name = {});
// The algebra of the action must carry its (possibly indefinite) form.
CourantData action_courant(const GAction& act, std::string name = {});

// Pairing symmetric and nondegenerate; d eta = 0 (standard); the action and
// rho(phi_d) = 0 (action).
Report validate_courant(const CourantData& E);

Polynomial pair(const CourantData& E, const SectionE& a, const SectionE& b);
MultivectorField anchor_of(const CourantData& E, const SectionE& s);
// <a*(alpha), e> = alpha(a(e)).
SectionE anchor_dual(const CourantData& E, const OneForm& alpha);
SectionE courant_bracket(const CourantData& E, const SectionE& x, const SectionE& y);
SectionE section_add(const SectionE& a, const SectionE& b);
SectionE section_scale(const SectionE& a, const Polynomial& f);
bool section_is_zero(const CourantData& E, const SectionE& s);
std::string section_to_string(const CourantData& E, const SectionE& s);

// Constant frame, plus every frame element times every coordinate.
std::vector<SectionE> generating_sections(const CourantData& E, bool with_multiples = true);
// C-1 Leibniz/Jacobi, C-2 invariance of the pairing, C-3 symmetric part.
Report check_courant_axioms(const CourantData& E, const std::vector<SectionE>& family);

enum class Membership { member, not_member, inconclusive };
// Whether s lies in the span of rows over the coordinate ring. Exact when the
// rows have a constant invertible block; otherwise a linear solve with
// coefficients of degree at most the cap (QPG_DEGREE_CAP, default 6).
Membership in_module_span(const CourantData& E, const std::vector<SectionE>& rows, const SectionE& s);
std::size_t degree_cap();

struct DiracData {
  CourantData parent;
  std::vector<SectionE> span;
  std::string name;
};
// Lagrangian (pairings vanish, rank half the rank of E at the points) and
// closed under the bracket, function multiples included.
Report check_dirac(const DiracData& D, const std::vector<std::vector<Rational>>& points);

DiracData tangent_dirac(const CourantData& E);
DiracData cotangent_dirac(const CourantData& E);
// {(pi#(alpha), alpha)}, with pi# the Hamiltonian map.
DiracData graph_of_bivector(const CourantData& E, const MultivectorField& pi);
// {(X, i_X omega)} for a two-form omega_{ij} (i < j).
DiracData graph_of_two_form(const CourantData& E, const std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial>& omega);
// Exterior derivative of a 2-form (the independent routine for the 2-form test).
std::map<CourantData::Triple, Polynomial> exterior_derivative(
    const CoordinateRing& ring, const std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial>& omega);

// A_G = G x d, d = g + g-bar, rho(xi,eta) = -xi^R + eta^L, with the diagonal.
DiracData cartan_dirac(const MatrixGroupChart& G);

// Morphism of Manin pairs over a point: K inside E2 + E1-bar (E2 coordinates first).
struct LinearManinMorphism {
  LieAlgebraData E1, E2;  // with forms
  Subspace A1, A2;
  Subspace K;
};
struct LinearManinResult {
  Report report;
  bool valid = false;
  // phi_K from E1/A1 to E2/A2, on representatives: column j is the image of
  // the j-th vector of complement1, given as a vector of E2.
  Subspace complement1;
  std::vector<Vector> phi;
};
LinearManinResult check_manin_pair_morphism_linear(const LinearManinMorphism& M);
// Image under phi_K of an element of E1, as a representative in E2 (mod A2).
Vector apply_phi(const LinearManinResult& r, const LinearManinMorphism& M, const Vector& e1);

}  // namespace qpg
