#pragma once

#include <json.hpp>

#include <chrono>
#include <functional>
#include <string>
#include <vector>

namespace qpg {

enum class Status { pass, fail, inconclusive, skipped };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CheckResult {
  std::string name;
  Status status = Status::pass;
  std::string witness;
  double elapsed_ms = 0;

  bool ok() const { return status == Status::pass; }
};

inline CheckResult pass(std::string name) { return {std::move(name), Status::pass, {}, 0}; }
inline CheckResult fail(std::string name, std::string witness) {
  return {std::move(name), Status::fail, std::move(witness), 0};
}
inline CheckResult verdict(std::string name, bool ok, std::string witness = {}) {
  return ok ? pass(std::move(name)) : fail(std::move(name), std::move(witness));
}

class Report {
 public:
  static constexpr int kSchemaVersion = 1;

  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<CheckResult>& checks() const { return checks_; }

  void add(CheckResult r) { checks_.push_back(std::move(r)); }
  void add_all(const Report& other, const std::string& prefix = {});
  // Runs fn, records its result with the elapsed wall time.
  CheckResult& run(const std::string& name, const std::function<CheckResult()>& fn);
  void skip(const std::string& name, const std::string& why);

  bool all_passed() const;
  bool any_failed() const;
  // 0 all pass (skips allowed), 2 any failure, 3 inconclusive without failure.
  int exit_code() const;
  const CheckResult* find(const std::string& name) const;

  // Deterministic payload; timings live in a separate "timing" object.
  nlohmann::json to_json(bool with_timing = true) const;
  static Report from_json(const nlohmann::json& j);
  std::string to_text() const;

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
};

Report merge_reports(const std::vector<Report>& reports, const std::string& subject);

}  // namespace qpg
