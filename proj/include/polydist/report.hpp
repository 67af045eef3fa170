#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace polydist {

/// Outcome of one statement check. Serializes to
/// {"statement","params","status","checks","failures","ms"} plus optional "details".
class VerificationReport {
 public:
  struct Failure {
    std::string check;
    std::string detail;
  };

  VerificationReport(std::string statement, nlohmann::json params);

  /// Records one checked identity; on failure keeps the first few counterexamples.
  bool check(bool ok, const std::string& name, const std::string& detail = {});
  void fail(const std::string& name, const std::string& detail);
  void note(const std::string& key, nlohmann::json value) { details_[key] = std::move(value); }
  /// Merges another report's checks and failures (prefixing check names).
  void absorb(const VerificationReport& other, const std::string& prefix = {});
  void finish();

  const std::string& statement() const { return statement_; }
  const nlohmann::json& params() const { return params_; }
  const nlohmann::json& details() const { return details_; }
  bool passed() const { return failure_count_ == 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failure_count() const { return failure_count_; }
  const std::vector<Failure>& failures() const { return failures_; }
  double ms() const { return ms_; }

  nlohmann::json to_json(bool with_timing = true) const;

  static constexpr std::size_t kMaxListedFailures = 25;

 private:
  std::string statement_;
  nlohmann::json params_;
  nlohmann::json details_ = nlohmann::json::object();
  std::size_t checks_ = 0;
  std::size_t failure_count_ = 0;
  std::vector<Failure> failures_;
  std::chrono::steady_clock::time_point start_;
  double ms_ = 0;
};

}  // namespace polydist
