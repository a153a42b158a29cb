#include "qpg/io.hpp"

#include "qpg/parser.hpp"

#include <fstream>
#include <sstream>

namespace qpg {

using nlohmann::json;

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string at(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

const json& member(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  if (!j.contains(key)) throw SchemaError(path, "missing key \"" + key + "\"");
  return j.at(key);
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

std::size_t get_index(const json& j, std::size_t bound, const std::string& path) {
  if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
  long v = j.get<long>();
  if (v < 0 || static_cast<std::size_t>(v) >= bound)
    throw SchemaError(path, "index " + std::to_string(v) + " out of range [0, " + std::to_string(bound) + ")");
  return static_cast<std::size_t>(v);
}

const json& array_at(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

// Objects of one kind, with their paths.
std::vector<std::pair<const json*, std::string>> objects_of(const json& root, const std::string& singular,
                                                            const std::string& plural) {
  std::vector<std::pair<const json*, std::string>> out;
  if (root.contains(singular)) out.push_back({&root.at(singular), "/" + singular});
  if (root.contains(plural)) {
    const auto& arr = array_at(root.at(plural), "/" + plural);
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back({&arr[i], at("/" + plural, i)});
  }
  return out;
}

GAction sl2_double_action(const MatrixGroupChart& G) {
  auto d = direct_sum(G.algebra.data, G.algebra.data, -1, "sl2+sl2bar");
  GAction act{d, {}};
  for (std::size_t i = 0; i < 3; ++i) act.rho.push_back(-right_field(G, 0, G.algebra.basis[i]));
  for (std::size_t i = 0; i < 3; ++i) act.rho.push_back(left_field(G, 0, G.algebra.basis[i]));
  return act;
}

const MatrixGroupChart* group_of_chart(const Document& doc, const RingPtr& ring) {
  for (const auto& [name, G] : doc.groups)
    if (G.ring == ring) return &G;
  return nullptr;
}

std::string action_name(const Document& doc) {
  if (doc.root.contains("space")) {
    const auto& sp = doc.root.at("space");
    return get_string(member(sp, "action", "/space"), "/space/action");
  }
  std::vector<std::string> user;
  for (const auto& [obj, path] : objects_of(doc.root, "action", "actions"))
    user.push_back(get_string(member(*obj, "name", path), at(path, "name")));
  if (user.size() == 1) return user.front();
  if (user.empty()) throw SchemaError("/space", "no action given; name one with {\"space\": {\"action\": ...}}");
  throw SchemaError("/space", "several actions; name one with {\"space\": {\"action\": ...}}");
}

}  // namespace

const LieAlgebraData& Document::algebra(const std::string& name, const std::string& path) const {
  auto it = algebras.find(name);
  if (it == algebras.end()) throw SchemaError(path, "unknown Lie algebra \"" + name + "\"");
  return it->second;
}

const RingPtr& Document::chart(const std::string& name, const std::string& path) const {
  auto it = charts.find(name);
  if (it == charts.end()) throw SchemaError(path, "unknown chart \"" + name + "\"");
  return it->second;
}

const GAction& Document::action(const std::string& name, const std::string& path) const {
  auto it = actions.find(name);
  if (it == actions.end()) throw SchemaError(path, "unknown action \"" + name + "\"");
  return it->second;
}

Rational parse_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError(path, "expected a rational (integer or string)");
  auto ring = CoordinateRing::make({});
  try {
    Polynomial p = parse_polynomial_raw(j.get<std::string>(), *ring);
    return p.constant_term();
  } catch (const ParseError& e) {
    throw SchemaError(path, e.what());
  }
}

Polynomial parse_poly(const json& j, const CoordinateRing& ring, const std::string& path) {
  if (j.is_number_integer()) return ring.constant(Rational(j.get<long>()));
  if (!j.is_string()) throw SchemaError(path, "expected a polynomial string");
  try {
    return parse_polynomial(j.get<std::string>(), ring);
  } catch (const ParseError& e) {
    throw SchemaError(path, e.what());
  }
}

Matrix parse_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  array_at(j, path);
  if (j.size() != rows) throw SchemaError(path, "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto& row = array_at(j[r], at(path, r));
    if (row.size() != cols) throw SchemaError(at(path, r), "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_rational(row[c], at(at(path, r), c));
  }
  return m;
}

std::vector<Vector> parse_vectors(const json& j, std::size_t dim, const std::string& path) {
  array_at(j, path);
  std::vector<Vector> out;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const auto& row = array_at(j[r], at(path, r));
    if (row.size() != dim) throw SchemaError(at(path, r), "expected " + std::to_string(dim) + " entries");
    Vector v(dim);
    for (std::size_t c = 0; c < dim; ++c) v[c] = parse_rational(row[c], at(at(path, r), c));
    out.push_back(v);
  }
  return out;
}

LieAlgebraData parse_lie_algebra(const json& j, const std::string& path) {
  std::string name = get_string(member(j, "name", path), at(path, "name"));
  const auto& basis_j = array_at(member(j, "basis", path), at(path, "basis"));
  std::vector<std::string> basis;
  for (std::size_t i = 0; i < basis_j.size(); ++i) basis.push_back(get_string(basis_j[i], at(at(path, "basis"), i)));
  LieAlgebraData L(name, basis);
  const std::size_t n = basis.size();
  if (j.contains("brackets")) {
    const std::string bp = at(path, "brackets");
    const auto& br = array_at(j.at("brackets"), bp);
    for (std::size_t e = 0; e < br.size(); ++e) {
      const std::string ep = at(bp, e);
      std::size_t i = get_index(member(br[e], "i", ep), n, at(ep, "i"));
      std::size_t k = get_index(member(br[e], "j", ep), n, at(ep, "j"));
      Vector v(n);
      const auto& terms = array_at(member(br[e], "terms", ep), at(ep, "terms"));
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const std::string tp = at(at(ep, "terms"), t);
        std::size_t idx = get_index(member(terms[t], "k", tp), n, at(tp, "k"));
        v[idx] += parse_rational(member(terms[t], "c", tp), at(tp, "c"));
      }
      if (i == k && !is_zero(v)) throw SchemaError(ep, "[e_i, e_i] must vanish");
      L.set_bracket(i, k, v);
    }
  }
  if (j.contains("form")) L.form = parse_matrix(j.at("form"), n, n, at(path, "form"));
  return L;
}

RingPtr parse_chart(const json& j, const std::string& path) {
  const auto& vars_j = array_at(member(j, "vars", path), at(path, "vars"));
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < vars_j.size(); ++i) vars.push_back(get_string(vars_j[i], at(at(path, "vars"), i)));
  auto plain = CoordinateRing::make(vars);
  std::vector<Polynomial> ideal;
  if (j.contains("ideal")) {
    const auto& id = array_at(j.at("ideal"), at(path, "ideal"));
    for (std::size_t i = 0; i < id.size(); ++i) ideal.push_back(parse_poly(id[i], *plain, at(at(path, "ideal"), i)));
  }
  return CoordinateRing::make(vars, ideal);
}

GAction parse_action(const Document& doc, const json& j, const std::string& path) {
  const auto& L = doc.algebra(get_string(member(j, "algebra", path), at(path, "algebra")), at(path, "algebra"));
  const auto& R = doc.chart(get_string(member(j, "chart", path), at(path, "chart")), at(path, "chart"));
  const std::string fp = at(path, "fields");
  const auto& fields = array_at(member(j, "fields", path), fp);
  if (fields.size() != L.dim()) throw SchemaError(fp, "expected one field per basis element of " + L.name);
  GAction act{L, {}};
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto& comps = array_at(fields[i], at(fp, i));
    if (comps.size() != R->nvars()) throw SchemaError(at(fp, i), "expected one component per coordinate");
    std::vector<Polynomial> c;
    for (std::size_t k = 0; k < comps.size(); ++k) c.push_back(parse_poly(comps[k], *R, at(at(fp, i), k)));
    act.rho.push_back(MultivectorField::vector_field(R, c));
  }
  return act;
}

MultivectorField parse_bivector(const json& j, const RingPtr& ring, const std::string& path) {
  array_at(j, path);
  MultivectorField pi(ring);
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string ep = at(path, e);
    std::size_t i = get_index(member(j[e], "i", ep), ring->nvars(), at(ep, "i"));
    std::size_t k = get_index(member(j[e], "j", ep), ring->nvars(), at(ep, "j"));
    if (i == k) throw SchemaError(ep, "i and j must differ");
    pi.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k)},
                parse_poly(member(j[e], "c", ep), *ring, at(ep, "c")));
  }
  return pi;
}

PolyMap parse_map(const Document& doc, const json& j, const std::string& path) {
  const auto& src = doc.chart(get_string(member(j, "source", path), at(path, "source")), at(path, "source"));
  const auto& tgt = doc.chart(get_string(member(j, "target", path), at(path, "target")), at(path, "target"));
  const std::string cp = at(path, "components");
  const auto& comps = array_at(member(j, "components", path), cp);
  if (comps.size() != tgt->nvars()) throw SchemaError(cp, "expected one component per target coordinate");
  PolyMap f{src, tgt, {}};
  for (std::size_t i = 0; i < comps.size(); ++i) f.components.push_back(parse_poly(comps[i], *src, at(cp, i)));
  return f;
}

GradedAlgebraPtr parse_graded_algebra(const json& j, const std::string& path) {
  const std::string gp = at(path, "gens");
  const auto& gens_j = array_at(member(j, "gens", path), gp);
  std::vector<GradedGenerator> gens;
  std::vector<std::string> even;
  for (std::size_t i = 0; i < gens_j.size(); ++i) {
    const std::string ip = at(gp, i);
    std::string name = get_string(member(gens_j[i], "name", ip), at(ip, "name"));
    const auto& d = member(gens_j[i], "deg", ip);
    if (!d.is_number_integer()) throw SchemaError(at(ip, "deg"), "expected an integer");
    gens.push_back({name, d.get<int>()});
    if (d.get<int>() == 0) even.push_back(name);
  }
  auto base = CoordinateRing::make(even);
  std::vector<Polynomial> rel;
  if (j.contains("relations")) {
    const std::string rp = at(path, "relations");
    const auto& rs = array_at(j.at("relations"), rp);
    for (std::size_t i = 0; i < rs.size(); ++i) rel.push_back(parse_poly(rs[i], *base, at(rp, i)));
  }
  auto A = GradedAlgebra::make(gens, rel);
  for (std::size_t a = 0; a < A->ngens(); ++a)
    for (std::size_t b = 0; b < A->ngens(); ++b)
      if (!A->table_entry_set(a, b)) A->set_bracket(a, b, A->zero());
  if (j.contains("brackets")) {
    const std::string bp = at(path, "brackets");
    const auto& bs = array_at(j.at("brackets"), bp);
    for (std::size_t e = 0; e < bs.size(); ++e) {
      const std::string ep = at(bp, e);
      auto gen_index = [&](const char* key) {
        std::string name = get_string(member(bs[e], key, ep), at(ep, key));
        int i = A->index_of(name);
        if (i < 0) throw SchemaError(at(ep, key), "unknown generator \"" + name + "\"");
        return static_cast<std::size_t>(i);
      };
      std::size_t a = gen_index("a"), b = gen_index("b");
      const auto& v = member(bs[e], "value", ep);
      GradedElement value = A->zero();
      try {
        value = v.is_number_integer() ? A->constant(Rational(v.get<long>())) : A->parse(get_string(v, at(ep, "value")));
      } catch (const ParseError& err) {
        throw SchemaError(at(ep, "value"), err.what());
      }
      A->set_bracket(a, b, value);
    }
  }
  return A;
}

CourantData parse_courant(const Document& doc, const json& j, const std::string& path) {
  std::string type = get_string(member(j, "type", path), at(path, "type"));
  if (type == "standard") {
    const auto& R = doc.chart(get_string(member(j, "chart", path), at(path, "chart")), at(path, "chart"));
    std::map<CourantData::Triple, Polynomial> eta;
    if (j.contains("eta")) {
      const std::string ep = at(path, "eta");
      const auto& es = array_at(j.at("eta"), ep);
      for (std::size_t e = 0; e < es.size(); ++e) {
        const std::string p = at(ep, e);
        std::array<std::size_t, 3> idx{get_index(member(es[e], "i", p), R->nvars(), at(p, "i")),
                                       get_index(member(es[e], "j", p), R->nvars(), at(p, "j")),
                                       get_index(member(es[e], "k", p), R->nvars(), at(p, "k"))};
        Polynomial c = parse_poly(member(es[e], "c", p), *R, at(p, "c"));
        // Sort the indices, tracking the sign of the permutation.
        int sign = 1;
        for (int pass = 0; pass < 2; ++pass)
          for (std::size_t q = 0; q + 1 < 3; ++q)
            if (idx[q] > idx[q + 1]) std::swap(idx[q], idx[q + 1]), sign = -sign;
        if (idx[0] == idx[1] || idx[1] == idx[2]) throw SchemaError(p, "repeated index in a 3-form");
        CourantData::Triple t{static_cast<std::uint32_t>(idx[0]), static_cast<std::uint32_t>(idx[1]),
                              static_cast<std::uint32_t>(idx[2])};
        auto it = eta.find(t);
        Polynomial term = sign > 0 ? c : -c;
        if (it == eta.end()) eta.emplace(t, term);
        else it->second += term;
      }
    }
    return standard_courant(R, eta, j.value("name", std::string("standard")));
  }
  if (type == "action") {
    GAction act = doc.action(get_string(member(j, "action", path), at(path, "action")), at(path, "action"));
    if (j.contains("algebra")) {
      const auto& d = doc.algebra(get_string(j.at("algebra"), at(path, "algebra")), at(path, "algebra"));
      if (d.dim() != act.algebra.dim()) throw SchemaError(at(path, "algebra"), "dimension differs from the action's algebra");
      act.algebra = d;
    }
    if (!act.algebra.form) throw SchemaError(path, "the algebra of an action Courant algebroid needs a form");
    return action_courant(act, j.value("name", std::string("action")));
  }
  throw SchemaError(at(path, "type"), "expected \"standard\" or \"action\"");
}

DiracData parse_dirac(const CourantData& parent, const json& j, const std::string& path) {
  const std::string sp = at(path, "span");
  const auto& span = array_at(member(j, "span", path), sp);
  DiracData D{parent, {}, j.value("name", std::string("dirac"))};
  for (std::size_t r = 0; r < span.size(); ++r) {
    const auto& row = array_at(span[r], at(sp, r));
    if (row.size() != parent.rank()) throw SchemaError(at(sp, r), "expected " + std::to_string(parent.rank()) + " entries");
    SectionE s;
    for (std::size_t c = 0; c < row.size(); ++c) s.push_back(parse_poly(row[c], *parent.ring, at(at(sp, r), c)));
    D.span.push_back(s);
  }
  return D;
}

std::vector<std::vector<Rational>> parse_points(const json& j, const std::string& path) {
  const json* arr = &j;
  std::string p = path;
  if (j.is_object()) {
    arr = &member(j, "points", path);
    p = at(path, "points");
  }
  array_at(*arr, p);
  std::vector<std::vector<Rational>> out;
  for (std::size_t i = 0; i < arr->size(); ++i) {
    const auto& row = array_at((*arr)[i], at(p, i));
    std::vector<Rational> x;
    for (std::size_t k = 0; k < row.size(); ++k) x.push_back(parse_rational(row[k], at(at(p, i), k)));
    out.push_back(x);
  }
  return out;
}

Document parse_document(const json& j) {
  if (!j.is_object()) throw SchemaError("", "expected a JSON object at the top level");
  Document doc;
  doc.root = j;
  doc.algebras["so3"] = so3_algebra();
  doc.algebras["sl2"] = sl2_algebra();
  for (std::size_t n = 1; n <= 4; ++n) doc.algebras["abelian" + std::to_string(n)] = abelian_algebra(n);
  auto G = sl2_group("x");
  G.name = "SL2";
  doc.groups["SL2"] = G;
  doc.charts["SL2"] = G.ring;
  doc.actions["SL2.conjugation"] = conjugation_action(G);
  doc.actions["SL2.double"] = sl2_double_action(G);

  for (const auto& [obj, path] : objects_of(j, "lie_algebra", "lie_algebras")) {
    auto L = parse_lie_algebra(*obj, path);
    doc.algebras[L.name] = L;
  }
  for (const auto& [obj, path] : objects_of(j, "chart", "charts")) {
    std::string name = get_string(member(*obj, "name", path), at(path, "name"));
    doc.charts[name] = parse_chart(*obj, path);
  }
  for (const auto& [obj, path] : objects_of(j, "action", "actions")) {
    std::string name = get_string(member(*obj, "name", path), at(path, "name"));
    doc.actions[name] = parse_action(doc, *obj, path);
  }
  return doc;
}

json read_json_file(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw SchemaError(file, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(file, std::string("invalid JSON: ") + e.what());
  }
}

Document load_document(const std::string& file) { return parse_document(read_json_file(file)); }

QPSpace document_space(const Document& doc) {
  std::string name = action_name(doc);
  const GAction& act = doc.action(name, "/space/action");
  const RingPtr& R = act.rho.empty() ? doc.charts.begin()->second : act.rho.front().ring();
  MultivectorField pi(R);
  if (doc.root.contains("bivector")) pi = parse_bivector(doc.root.at("bivector"), R, "/bivector");
  std::vector<MultivectorField> frame;
  if (const auto* G = group_of_chart(doc, R)) {
    frame = left_frame(*G);
  } else if (doc.root.contains("space") && doc.root.at("space").contains("frame")) {
    const std::string fp = "/space/frame";
    const auto& fr = array_at(doc.root.at("space").at("frame"), fp);
    for (std::size_t i = 0; i < fr.size(); ++i) {
      const auto& comps = array_at(fr[i], at(fp, i));
      if (comps.size() != R->nvars()) throw SchemaError(at(fp, i), "expected one component per coordinate");
      std::vector<Polynomial> c;
      for (std::size_t k = 0; k < comps.size(); ++k) c.push_back(parse_poly(comps[k], *R, at(at(fp, i), k)));
      frame.push_back(MultivectorField::vector_field(R, c));
    }
  } else if (R->has_ideal()) {
    throw SchemaError("/space/frame", "a chart with an ideal needs a frame of tangent vector fields");
  }
  return make_space(name, act, pi, frame);
}

HamiltonianSpace document_hamiltonian(const Document& doc) {
  QPSpace M = document_space(doc);
  if (!doc.root.contains("map")) throw SchemaError("", "missing key \"map\"");
  PolyMap Phi = parse_map(doc, doc.root.at("map"), "/map");
  const auto* G = group_of_chart(doc, Phi.target);
  if (!G) throw SchemaError("/map/target", "the target of a moment map must be a group chart (SL2)");
  if (Phi.source->vars() != M.ring()->vars()) throw SchemaError("/map/source", "source differs from the chart of the action");
  Phi.source = M.ring();
  return {M, *G, Phi};
}

}  // namespace qpg
