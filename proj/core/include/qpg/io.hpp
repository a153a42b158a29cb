#pragma once

#include "qpg/chart.hpp"
#include "qpg/courant.hpp"
#include "qpg/graded.hpp"
#include "qpg/graded_lie.hpp"
#include "qpg/lie.hpp"
#include "qpg/quasi_poisson.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpg {

// Input that does not match the schema; the message starts with a JSON pointer.
class SchemaError : public std::runtime_error {
 public:
  SchemaError(const std::string& path, const std::string& message)
      : std::runtime_error(path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Named objects of an input document. Every kind may be given as a single
// object under the singular key or as an array under the plural key
// ("lie_algebra" / "lie_algebras", "chart" / "charts", "action" / "actions").
// Built-in names: algebras so3, sl2, abelianN; chart SL2 (entries x11..x22);
// actions SL2.conjugation and SL2.double (rho(xi,eta) = -xi^R + eta^L on
// sl2 + sl2-bar).
struct Document {
  nlohmann::json root;
  std::map<std::string, LieAlgebraData> algebras;
  std::map<std::string, RingPtr> charts;
  std::map<std::string, GAction> actions;
  std::map<std::string, MatrixGroupChart> groups;

  const LieAlgebraData& algebra(const std::string& name, const std::string& path) const;
  const RingPtr& chart(const std::string& name, const std::string& path) const;
  const GAction& action(const std::string& name, const std::string& path) const;
  bool has(const std::string& key) const { return root.contains(key); }
};

Document parse_document(const nlohmann::json& j);
Document load_document(const std::string& file);
nlohmann::json read_json_file(const std::string& file);

LieAlgebraData parse_lie_algebra(const nlohmann::json& j, const std::string& path);
RingPtr parse_chart(const nlohmann::json& j, const std::string& path);
GAction parse_action(const Document& doc, const nlohmann::json& j, const std::string& path);
Rational parse_rational(const nlohmann::json& j, const std::string& path);
Polynomial parse_poly(const nlohmann::json& j, const CoordinateRing& ring, const std::string& path);
Matrix parse_matrix(const nlohmann::json& j, std::size_t rows, std::size_t cols, const std::string& path);
std::vector<Vector> parse_vectors(const nlohmann::json& j, std::size_t dim, const std::string& path);

// {"bivector": [{"i","j","c"}]} on the chart of the document's action.
MultivectorField parse_bivector(const nlohmann::json& j, const RingPtr& ring, const std::string& path);
// {"map": {"source", "target", "components"}}; the target must be a chart or group.
PolyMap parse_map(const Document& doc, const nlohmann::json& j, const std::string& path);
// {"graded_algebra": {"gens", "relations", "brackets"}}.
GradedAlgebraPtr parse_graded_algebra(const nlohmann::json& j, const std::string& path);
// {"courant": {"type", "chart", "eta", "algebra", "action"}}.
CourantData parse_courant(const Document& doc, const nlohmann::json& j, const std::string& path);
// {"dirac": {"parent", "span"}}: span rows are sections of the parent.
DiracData parse_dirac(const CourantData& parent, const nlohmann::json& j, const std::string& path);
// Either an array of points or {"points": [...]}; entries are rationals.
std::vector<std::vector<Rational>> parse_points(const nlohmann::json& j, const std::string& path);

// The single action of a document, as the quasi-Poisson space with the given
// bivector. Frames: left-invariant on the built-in group chart, coordinate
// fields otherwise.
QPSpace document_space(const Document& doc);
// The moment map of the document into the built-in group.
HamiltonianSpace document_hamiltonian(const Document& doc);

}  // namespace qpg
