#include "qpg/report.hpp"

#include <exception>
#include <sstream>
#include <stdexcept>

namespace qpg {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::skipped: return "skipped";
  }
  return "fail";
}

Status status_from_string(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "inconclusive") return Status::inconclusive;
  if (s == "skipped") return Status::skipped;
  throw std::invalid_argument("unknown status " + s);
}

void Report::add_all(const Report& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.name = prefix + c.name;
    checks_.push_back(std::move(c));
  }
}

CheckResult& Report::run(const std::string& name, const std::function<CheckResult()>& fn) {
  auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = fn();
  } catch (const std::exception& e) {
    r = fail(name, std::string("exception: ") + e.what());
  }
  r.name = name;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  checks_.push_back(std::move(r));
  return checks_.back();
}

void Report::skip(const std::string& name, const std::string& why) {
  checks_.push_back({name, Status::skipped, why, 0});
}

bool Report::all_passed() const {
  for (const auto& c : checks_)
    if (c.status != Status::pass && c.status != Status::skipped) return false;
  return true;
}

bool Report::any_failed() const {
  for (const auto& c : checks_)
    if (c.status == Status::fail) return true;
  return false;
}

int Report::exit_code() const {
  if (any_failed()) return 2;
  for (const auto& c : checks_)
    if (c.status == Status::inconclusive) return 3;
  return 0;
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

nlohmann::json Report::to_json(bool with_timing) const {
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["subject"] = subject_;
  nlohmann::json arr = nlohmann::json::array();
  nlohmann::json timing = nlohmann::json::object();
  for (const auto& c : checks_) {
    nlohmann::json e;
    e["name"] = c.name;
    e["status"] = to_string(c.status);
    if (!c.witness.empty()) e["witness"] = c.witness;
    arr.push_back(e);
    timing[c.name] = c.elapsed_ms;
  }
  j["checks"] = arr;
  j["exit_code"] = exit_code();
  if (with_timing) j["timing"] = timing;
  return j;
}

Report Report::from_json(const nlohmann::json& j) {
  if (!j.contains("schema_version") || j.at("schema_version").get<int>() != kSchemaVersion)
    throw std::invalid_argument("report: unsupported schema_version");
  Report r(j.value("subject", std::string()));
  const nlohmann::json* timing = j.contains("timing") ? &j.at("timing") : nullptr;
  for (const auto& e : j.at("checks")) {
    CheckResult c;
    c.name = e.at("name").get<std::string>();
    c.status = status_from_string(e.at("status").get<std::string>());
    c.witness = e.value("witness", std::string());
    if (timing && timing->contains(c.name)) c.elapsed_ms = timing->at(c.name).get<double>();
    r.checks_.push_back(std::move(c));
  }
  return r;
}

std::string Report::to_text() const {
  std::ostringstream out;
  if (!subject_.empty()) out << "== " << subject_ << "\n";
  for (const auto& c : checks_) {
    std::string tag = to_string(c.status);
    for (auto& ch : tag) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    out << "[" << tag << "] " << c.name;
    if (c.elapsed_ms >= 1) out << " (" << static_cast<long>(c.elapsed_ms) << " ms)";
    out << "\n";
    if (!c.witness.empty() && c.status != Status::pass) out << "    " << c.witness << "\n";
  }
  return out.str();
}

Report merge_reports(const std::vector<Report>& reports, const std::string& subject) {
  Report merged(subject);
  for (const auto& r : reports) merged.add_all(r, r.subject().empty() ? "" : r.subject() + "/");
  return merged;
}

}  // namespace qpg
