#include "qpg/bialgebroid.hpp"
#include "qpg/courant.hpp"
#include "qpg/examples.hpp"
#include "qpg/graded_lie.hpp"
#include "qpg/graded_poisson.hpp"
#include "qpg/io.hpp"
#include "qpg/quasi_poisson.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

using namespace qpg;
using nlohmann::json;

namespace {

struct CheckArgs {
  std::string kind;
  std::string input;
  std::string json_out;
  std::string points_file;
  bool slow = false;
  bool timing = false;
};

std::vector<std::vector<Rational>> load_points(const CheckArgs& a) {
  if (a.points_file.empty()) return {};
  return parse_points(read_json_file(a.points_file), a.points_file);
}

GradedLieAlgebra ungraded(const LieAlgebraData& L) {
  GradedLieAlgebra A(L.name, L.basis, std::vector<int>(L.dim(), 0));
  for (std::size_t i = 0; i < L.dim(); ++i)
    for (std::size_t j = i + 1; j < L.dim(); ++j) A.set_bracket(i, j, L.c[i][j]);
  if (L.form) A.set_pairing(*L.form, 0);
  return A;
}

Report check_manin(const Document& doc) {
  const std::string path = "/manin_triple";
  if (!doc.has("manin_triple")) throw SchemaError("", "missing key \"manin_triple\"");
  const auto& j = doc.root.at("manin_triple");
  if (!j.contains("algebra")) throw SchemaError(path, "missing key \"algebra\"");
  const auto& L = doc.algebra(j.at("algebra").get<std::string>(), path + "/algebra");
  std::string graded = j.value("graded", std::string());
  if (graded == "Q" || graded == "Qd") {
    if (!L.form) throw SchemaError(path + "/algebra", "needs a form");
    auto m = graded == "Q" ? q_manin_triple(L) : qd_lagrangian_pair(L);
    Report r("manin_triple:" + graded + "(" + L.name + ")");
    r.add_all(check_graded_lie(m.algebra), "algebra.");
    r.add_all(check_manin_triple(m.algebra, m.A, m.B), "");
    return r;
  }
  if (!graded.empty()) throw SchemaError(path + "/graded", "expected \"Q\" or \"Qd\"");
  if (!L.form) throw SchemaError(path + "/algebra", "a Manin triple needs a form on the algebra");
  if (!j.contains("A") || !j.contains("B")) throw SchemaError(path, "needs subspaces \"A\" and \"B\"");
  auto A = parse_vectors(j.at("A"), L.dim(), path + "/A");
  auto B = parse_vectors(j.at("B"), L.dim(), path + "/B");
  Report r("manin_triple:" + L.name);
  r.add_all(check_lie_algebra(L), "algebra.");
  r.add_all(check_manin_triple(ungraded(L), A, B), "");
  return r;
}

Report check_bialgebroid_input(const Document& doc) {
  const auto& j = doc.has("bialgebroid") ? doc.root.at("bialgebroid") : json::object();
  if (j.contains("algebra")) {
    const auto& g = doc.algebra(j.at("algebra").get<std::string>(), "/bialgebroid/algebra");
    if (!g.form) throw SchemaError("/bialgebroid/algebra", "needs a form");
    auto B = point_bialgebra(g);
    Report r("bialgebroid:" + g.name + " over a point");
    r.add_all(check_qp_bialgebroid(B), "");
    r.add_all(check_dual_differential(B), "dual.");
    return r;
  }
  // T M with D = [pi, .] in the frame of the space.
  QPSpace M = document_space(doc);
  LieAlgebroidFrame A;
  std::vector<OneForm> coframe;
  const auto& R = M.ring();
  bool group_chart = false;
  for (const auto& [name, G] : doc.groups)
    if (G.ring == R) {
      group_chart = true;
      A = tangent_algebroid("T" + name, R, left_frame(G), G.algebra.data);
      auto db = dual_bases(G.algebra.data);
      for (std::size_t i = 0; i < G.algebra.data.dim(); ++i) coframe.push_back(theta_left(G, 0, db.e_dual[i]));
    }
  if (!group_chart) {
    if (R->has_ideal()) throw SchemaError("/space", "bialgebroid input needs a plain chart or the SL2 chart");
    A = tangent_algebroid("T" + M.name, R, coordinate_frame(R), abelian_algebra(R->nvars()));
    for (std::size_t i = 0; i < R->nvars(); ++i) {
      OneForm dx(R->nvars(), R->zero());
      dx[i] = R->one();
      coframe.push_back(dx);
    }
  }
  QPBialgebroid B{A, M.algebra(), {}, hamiltonian_rules(A, from_multivector(A, coframe, M.pi))};
  for (const auto& f : M.action.rho) B.rho.push_back(from_multivector(A, coframe, f));
  Report r("bialgebroid:" + A.name);
  r.add_all(check_qp_bialgebroid(B), "");
  r.add_all(check_dual_differential(B, M.frame), "dual.");
  r.add_all(compare_with_cotangent(B, M), "cotangent.");
  return r;
}

Report run_check(const CheckArgs& a) {
  Document doc = load_document(a.input);
  auto points = load_points(a);
  const std::string& k = a.kind;
  if (k == "quasi-poisson") {
    auto M = document_space(doc);
    Report r("quasi-poisson:" + M.name);
    r.add_all(check_quasi_poisson(M), "");
    r.add_all(check_cotangent_differential(M, 1), "cotangent.");
    return r;
  }
  if (k == "moment-map") {
    auto H = document_hamiltonian(doc);
    Report r("moment-map:" + H.space.name);
    r.add_all(check_quasi_poisson(H.space), "quasi_poisson.");
    r.add_all(check_moment_map(H), "");
    if (!points.empty()) r.add_all(check_i_map(H, points), "i_map.");
    return r;
  }
  if (k == "manin-triple") return check_manin(doc);
  if (k == "courant" || k == "dirac") {
    if (!doc.has("courant")) throw SchemaError("", "missing key \"courant\"");
    auto E = parse_courant(doc, doc.root.at("courant"), "/courant");
    Report r(k + ":" + E.name);
    r.add_all(validate_courant(E), "valid.");
    if (k == "courant") {
      if (a.slow) {
        r.add_all(check_courant_axioms(E, generating_sections(E, true)), "axioms.");
      } else {
        r.add_all(check_courant_axioms(E, generating_sections(E, false)), "axioms_constant_frame.");
        r.skip("axioms", "function multiples need --slow");
      }
      return r;
    }
    if (!doc.has("dirac")) throw SchemaError("", "missing key \"dirac\"");
    auto D = parse_dirac(E, doc.root.at("dirac"), "/dirac");
    r.add_all(check_dirac(D, points), "");
    return r;
  }
  if (k == "bialgebroid") return check_bialgebroid_input(doc);
  if (k == "coisotropy") {
    auto M = document_space(doc);
    Report r("coisotropy:" + M.name);
    if (doc.has("subvariety")) {
      const auto& sj = doc.root.at("subvariety");
      if (!sj.contains("ideal") || !sj.at("ideal").is_array()) throw SchemaError("/subvariety", "needs an \"ideal\" array");
      auto gens = M.ring()->ideal_generators();
      for (std::size_t i = 0; i < sj.at("ideal").size(); ++i)
        gens.push_back(parse_poly(sj.at("ideal")[i], *M.ring(), "/subvariety/ideal/" + std::to_string(i)));
      auto S = CoordinateRing::make(M.ring()->vars(), gens, M.ring()->order());
      r.add_all(check_coisotropic_subvariety(M.pi, S), "subvariety.");
    }
    if (!points.empty() || !doc.has("subvariety"))
      r.add_all(check_coisotropic_stabilizers(M.action, M.s, points).report, "stabilizers.");
    return r;
  }
  if (k == "graded-poisson") {
    if (!doc.has("graded_algebra")) throw SchemaError("", "missing key \"graded_algebra\"");
    auto P = parse_graded_algebra(doc.root.at("graded_algebra"), "/graded_algebra");
    Report r("graded-poisson");
    r.add_all(check_graded_poisson(*P), "");
    return r;
  }
  throw SchemaError("", "unknown check kind " + k);
}

void write_json(const Report& r, const std::string& file, bool timing) {
  if (file.empty()) return;
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file);
  out << r.to_json(timing).dump(2) << "\n";
}

int emit(const Report& r, const std::string& json_out, bool timing) {
  std::cout << r.to_text();
  write_json(r, json_out, timing);
  int code = r.exit_code();
  std::cout << (code == 0 ? "OK" : code == 2 ? "FAILED" : "INCONCLUSIVE") << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qpg: exact verification of quasi-Poisson structures"};
  app.require_subcommand(1);

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "check the structures described in a JSON file");
  check->add_option("kind", ca.kind, "what to check")
      ->required()
      ->check(CLI::IsMember({"quasi-poisson", "moment-map", "manin-triple", "courant", "dirac", "bialgebroid",
                             "coisotropy", "graded-poisson"}));
  check->add_option("-i,--input", ca.input, "input JSON file")->required();
  check->add_option("--json", ca.json_out, "write the report as JSON");
  check->add_option("--points", ca.points_file, "JSON file with sample points");
  check->add_flag("--slow", ca.slow, "run slow checks");
  check->add_flag("--timing", ca.timing, "include timings in the JSON report");

  std::string example;
  bool skip_slow = false, verbose = false, ex_timing = false;
  std::string ex_json;
  auto* verify = app.add_subcommand("verify-example", "run a registered example and compare with its expectations");
  verify->add_option("name", example, "example name, or all")->required();
  verify->add_flag("--skip-slow", skip_slow, "skip slow checks");
  verify->add_flag("-v,--verbose", verbose, "also print every underlying check");
  verify->add_option("--json", ex_json, "write the report as JSON");
  verify->add_flag("--timing", ex_timing, "include timings in the JSON report");

  auto* list = app.add_subcommand("list-examples", "list the registered examples");

  std::string merge_dir, merge_json;
  auto* report = app.add_subcommand("report", "merge JSON reports");
  report->add_option("--merge", merge_dir, "directory of JSON reports")->required()->check(CLI::ExistingDirectory);
  report->add_option("--json", merge_json, "write the merged report as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) return emit(run_check(ca), ca.json_out, ca.timing);

    if (*list) {
      for (const auto& fx : registry()) std::cout << fx.name << "\t" << fx.summary << "\n";
      return 0;
    }

    if (*verify) {
      ExampleOptions opts{!skip_slow};
      std::vector<const ExampleFixture*> chosen;
      if (example == "all") {
        for (const auto& fx : registry()) chosen.push_back(&fx);
      } else if (const auto* fx = find_example(example)) {
        chosen.push_back(fx);
      } else {
        std::cerr << "unknown example \"" << example << "\"; see qpg list-examples\n";
        return 1;
      }
      std::vector<std::future<std::pair<Report, Report>>> jobs;
      for (const auto* fx : chosen)
        jobs.push_back(std::async(std::launch::async, [fx, opts, verbose] {
          Report detail = verbose ? fx->run(opts) : Report();
          return std::make_pair(verify_example(*fx, opts), detail);
        }));
      std::vector<Report> results;
      for (auto& j : jobs) {
        auto [r, detail] = j.get();
        if (verbose) std::cout << detail.to_text();
        std::cout << r.to_text();
        results.push_back(r);
      }
      Report all = results.size() == 1 ? results.front() : merge_reports(results, "all");
      write_json(all, ex_json, ex_timing);
      int code = all.exit_code();
      std::cout << (code == 0 ? "OK" : code == 2 ? "FAILED" : "INCONCLUSIVE") << "\n";
      return code;
    }

    if (*report) {
      std::vector<std::filesystem::path> files;
      for (const auto& e : std::filesystem::directory_iterator(merge_dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
      std::sort(files.begin(), files.end());
      std::vector<Report> reports;
      for (const auto& f : files) {
        try {
          reports.push_back(Report::from_json(read_json_file(f.string())));
        } catch (const SchemaError&) {
          throw;
        } catch (const std::exception& e) {
          throw SchemaError(f.string(), e.what());
        }
      }
      return emit(merge_reports(reports, merge_dir), merge_json, false);
    }
  } catch (const SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
