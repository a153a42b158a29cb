#pragma once

#include "qpg/bialgebroid.hpp"
#include "qpg/courant.hpp"
#include "qpg/graded_lie.hpp"
#include "qpg/graded_poisson.hpp"
#include "qpg/quasi_poisson.hpp"
#include "qpg/report.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qpg {

struct ExampleOptions {
  bool run_slow = true;
};

// Expected status of every check whose name equals `prefix` or starts with
// `prefix` followed by '.'. An expected fail means at least one such check fails.
struct ExpectedOutcome {
  std::string prefix;
  Status status = Status::pass;
  bool slow = false;
};

struct ExampleFixture {
  std::string name;
  std::string summary;
  std::vector<ExpectedOutcome> expected;
  std::function<Report(const ExampleOptions&)> run;
};

const std::vector<ExampleFixture>& registry();
const ExampleFixture* find_example(const std::string& name);
// Runs the fixture and compares with its expected outcomes: one check per
// expected outcome, plus a failure for any check no outcome covers.
Report verify_example(const ExampleFixture& fx, const ExampleOptions& opts = {});

// Builders shared by the fixtures, tests and benchmarks.

// SL(2) with conjugation, pi_G = 1/2 sum e^{iL} ^ e_i^R and Phi = id.
HamiltonianSpace sl2_conjugation(const std::string& prefix = "x");
// (G, rho, 0) for d = g + g with rho(xi, eta) = -xi^R + eta^L; form_sign is
// the sign of the form on the second copy.
QPSpace sl2_double_factor(const std::string& prefix, int form_sign = 1);
// D(G) on G x G with moment map (a b^-1, a^-1 b).
HamiltonianSpace sl2_double();
// The fused double with moment map a b^-1 a^-1 b.
HamiltonianSpace sl2_amm();
// s(a,b) = a b^-1 and t(a,b) = b^-1 a into the conjugation chart.
PolyMap amm_source(const HamiltonianSpace& amm, const HamiltonianSpace& conj);
PolyMap amm_target(const HamiltonianSpace& amm, const HamiltonianSpace& conj);
// Groupoid laws as polynomial identities on composable pairs and triples.
Report check_amm_groupoid();
// Graph of the multiplication inside the cube of the fused double is
// coisotropic for pi + pi - pi; with sign +1 on the third factor it is not.
Report check_amm_coisotropy(int third_sign = -1);

// The Lie algebra g over a point with rho = id and D = 0.
QPBialgebroid point_bialgebra(const LieAlgebraData& g);
// T SL(2) in the left frame with D = [pi_G, .]; perturbed adds e ^ f to pi_G.
QPBialgebroid tangent_bialgebroid(const HamiltonianSpace& conj, bool perturbed = false);

// sl2 + sl2-bar with h the diagonal and k = {(a h + b e, -a h + c f)}.
GeneralizedManinTriple double_generalized_manin_triple();
// sl2 + sl2 with s = (s_g, 0): valid but not transitive.
GeneralizedManinTriple degenerate_generalized_manin_triple();
// The quadruple (sl2 + sl2-bar, diag, sl2 + 0, rho) with rho the diagonal embedding.
QPGroupQuadruple double_quadruple();
// Check the quadruple, build K and read rho back from phi_K.
Report check_quadruple_round_trip(const QPGroupQuadruple& Q);

// Two routes to the same claim: the chart checks (quasi-Poisson plus moment
// map) and the structure map into G_small or G_big being Poisson.
struct CrossOracle {
  bool chart = false;
  bool graded = false;
  Report chart_report, graded_report;
};
CrossOracle cross_oracle(const QPSpace& M);
CrossOracle cross_oracle(const HamiltonianSpace& H);
// "<name>.chart", "<name>.graded" and "<name>.agree".
Report check_cross_oracle(const std::string& name, const CrossOracle& c);

}  // namespace qpg
