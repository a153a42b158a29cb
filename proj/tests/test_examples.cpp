#include "qpg/examples.hpp"
#include "qpg/io.hpp"

#include <doctest.h>

#include <algorithm>

using namespace qpg;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(QPG_FIXTURE_DIR) + "/" + name; }

std::string schema_error_path(const json& j) {
  try {
    auto doc = parse_document(j);
    document_space(doc);
  } catch (const SchemaError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST_SUITE("examples") {
  TEST_CASE("registry contains the required fixtures") {
    for (const char* name : {"abelian-r2", "so3-trivial", "sl2-conjugation", "double-sl2", "amm-sl2", "qp-bialgebra-sl2",
                             "cartan-dirac-sl2", "manin-triple-Q-so3", "gen-manin-triple-double-sl2",
                             "qp-group-quadruple-double"}) {
      CAPTURE(name);
      CHECK(find_example(name) != nullptr);
    }
    CHECK(find_example("no-such-example") == nullptr);
  }

  TEST_CASE("every fixture meets its expectations without slow checks") {
    for (const auto& fx : registry()) {
      CAPTURE(fx.name);
      auto r = verify_example(fx, {false});
      CHECK(r.exit_code() == 0);
      for (const auto& c : r.checks())
        if (c.status == Status::fail) MESSAGE(fx.name << ": " << c.name << " " << c.witness);
    }
  }

  TEST_CASE("amm-sl2 marks coisotropy as skipped") {
    auto r = verify_example(*find_example("amm-sl2"), {false});
    const auto* c = r.find("coisotropy pass");
    REQUIRE(c != nullptr);
    CHECK(c->status == Status::skipped);
  }

  TEST_CASE("a wrong expectation is reported") {
    auto fx = *find_example("so3-trivial");
    fx.expected.push_back({"algebra", Status::fail, false});
    CHECK(verify_example(fx, {false}).exit_code() == 2);
  }

  TEST_CASE("report JSON round-trips and is deterministic") {
    const auto& fx = *find_example("sl2-conjugation");
    auto a = verify_example(fx, {false});
    auto b = verify_example(fx, {false});
    CHECK(a.to_json(false) == b.to_json(false));
    auto back = Report::from_json(a.to_json(true));
    CHECK(back.to_json(false) == a.to_json(false));
    CHECK(a.to_json(false).at("schema_version") == Report::kSchemaVersion);
    CHECK_FALSE(a.to_json(false).contains("timing"));
  }

  TEST_CASE("merged reports prefix checks with the subject") {
    Report a("one"), b("two");
    a.add(pass("x"));
    b.add(fail("y", "w"));
    auto m = merge_reports({a, b}, "all");
    CHECK(m.find("one/x") != nullptr);
    CHECK(m.find("two/y")->status == Status::fail);
    CHECK(m.exit_code() == 2);
    Report inc("inc");
    inc.add({"z", Status::inconclusive, "", 0});
    CHECK(merge_reports({a, inc}, "all").exit_code() == 3);
  }

  TEST_CASE("fixture files load") {
    auto doc = load_document(fixture("so3-trivial.json"));
    auto M = document_space(doc);
    CHECK(M.ring()->nvars() == 3);
    CHECK(check_quasi_poisson(M).all_passed());
    auto conj = load_document(fixture("sl2-conjugation.json"));
    auto H = document_hamiltonian(conj);
    CHECK(H.space.pi == sl2_conjugation().space.pi);
    CHECK(check_moment_map(H).all_passed());
  }

  TEST_CASE("schema errors name the offending path") {
    json base = json::parse(R"({
      "chart": {"name": "R2", "vars": ["x", "y"]},
      "action": {"name": "a", "algebra": "abelian1", "chart": "R2", "fields": [["0", "0"]]},
      "bivector": [{"i": 0, "j": 1, "c": "x"}]
    })");
    CHECK(schema_error_path(base) == "<no error>");
    auto j = base;
    j["bivector"][0]["c"] = "x*(";
    CHECK(schema_error_path(j) == "/bivector/0/c");
    j = base;
    j["bivector"][0]["j"] = 5;
    CHECK(schema_error_path(j) == "/bivector/0/j");
    j = base;
    j["action"]["algebra"] = "g2";
    CHECK(schema_error_path(j) == "/action/algebra");
    j = base;
    j["action"]["fields"] = json::array({json::array({"0"})});
    CHECK(schema_error_path(j) == "/action/fields/0");
    j = base;
    j["chart"]["vars"][1] = "w";
    j["bivector"][0]["c"] = "y";
    CHECK(schema_error_path(j) == "/bivector/0/c");
    CHECK_THROWS_AS(load_document(fixture("does-not-exist.json")), SchemaError);
  }

  TEST_CASE("points") {
    auto pts = parse_points(json::parse(R"([["1/2", 3]])"), "");
    REQUIRE(pts.size() == 1);
    CHECK(pts[0][0] == Rational(1, 2));
    CHECK(pts[0][1] == 3);
    CHECK_THROWS_AS(parse_points(json::parse(R"([["1/0"]])"), ""), SchemaError);
  }
}
