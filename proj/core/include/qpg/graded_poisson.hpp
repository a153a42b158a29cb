#pragma once

#include "qpg/chart.hpp"
#include "qpg/graded.hpp"
#include "qpg/lie.hpp"
#include "qpg/quasi_poisson.hpp"
#include "qpg/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qpg {

// Homogeneity, graded antisymmetry and Jacobi of the degree -1 table on
// generator triples; with check_relations, brackets of generators with the
// relations stay in the ideal.
Report check_graded_poisson(const GradedAlgebra& P, bool check_relations = true);

// G_small (no coordinates) or G_big (coordinates of a matrix group first).
struct GroupPresentation {
  GradedAlgebraPtr algebra;
  LieAlgebraData g;
  Matrix s;
  std::size_t t = 0;
  std::vector<std::size_t> xi;
  std::optional<MatrixGroupChart> group;
};

// {t,t} = phi, {t,xi} = 0, {xi,eta} = [xi,eta].
GroupPresentation build_Gsmall(const LieAlgebraData& g, const Matrix& s);
// Adds the group coordinates with {t,f} = sum b(e_i)f xi^i, {xi,f} = (xi^L - xi^R)f,
// {f,g} = 0. s is the inverse of the form.
GroupPresentation build_Gbig(const MatrixGroupChart& G);

// Gamma(wedge TM) as C(T*[1]M): coordinates and d_x of degree 1, {d_x, y} = delta.
GradedAlgebraPtr cotangent_presentation(const RingPtr& ring);
GradedElement to_graded(const MultivectorField& P, const GradedAlgebra& T);
MultivectorField from_graded(const GradedElement& x, const RingPtr& ring);

// Pullback along a map into `target`: images[i] is the image of target generator i.
struct GradedPoissonMap {
  GradedAlgebraPtr source, target;
  std::vector<GradedElement> images;

  GradedElement pullback(const GradedElement& x) const;
};

// Degrees preserved, relations pulled back into the source ideal and
// F*{a,b} = {F*a, F*b} on target generator pairs.
Report check_poisson_map(const GradedPoissonMap& F);

// t -> pi, xi -> rho(xi) (and f -> Phi^* f for G_big).
GradedPoissonMap structure_map(const QPSpace& M, const GroupPresentation& P, const GradedAlgebraPtr& T);
GradedPoissonMap structure_map(const HamiltonianSpace& H, const GroupPresentation& P, const GradedAlgebraPtr& T);

// mult^*: P -> P (x) P with t -> t1 + t2 + 1/2 sum xi^i_1 xi_i2, xi -> xi1 + xi2,
// coordinates by the matrix product.
struct Multiplication {
  GradedAlgebraPtr product;
  GradedPoissonMap map;
};
Multiplication multiplication_pullback(const GroupPresentation& P, bool with_cocycle = true);
// Poisson-Lie property and coassociativity on generators.
Report check_multiplication(const GroupPresentation& P);

// Both routes to the fusion of two Hamiltonian spaces: the chart fusion and the
// composition of the product structure map with mult^*.
struct FusionCrosscheck {
  Report report;
  MultivectorField pi_graded;
  MultivectorField residue;  // chart pi minus graded pi
  MultivectorField rho_psi;
};
FusionCrosscheck fusion_crosscheck(const HamiltonianSpace& a, const HamiltonianSpace& b, bool with_cocycle = true);

}  // namespace qpg
