#include "polydist/report.hpp"

namespace polydist {

VerificationReport::VerificationReport(std::string statement, nlohmann::json params)
    : statement_(std::move(statement)), params_(std::move(params)), start_(std::chrono::steady_clock::now()) {}

bool VerificationReport::check(bool ok, const std::string& name, const std::string& detail) {
  ++checks_;
  if (!ok) fail(name, detail);
  return ok;
}

void VerificationReport::fail(const std::string& name, const std::string& detail) {
  ++failure_count_;
  if (failures_.size() < kMaxListedFailures) failures_.push_back({name, detail});
}

void VerificationReport::absorb(const VerificationReport& other, const std::string& prefix) {
  checks_ += other.checks_;
  failure_count_ += other.failure_count_;
  for (const auto& f : other.failures_) {
    if (failures_.size() >= kMaxListedFailures) break;
    failures_.push_back({prefix + f.check, f.detail});
  }
}

void VerificationReport::finish() {
  ms_ = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
  nlohmann::json out;
  out["statement"] = statement_;
  out["params"] = params_;
  out["status"] = passed() ? "pass" : "fail";
  out["checks"] = checks_;
  nlohmann::json fails = nlohmann::json::array();
  for (const auto& f : failures_) fails.push_back({{"check", f.check}, {"detail", f.detail}});
  out["failures"] = std::move(fails);
  if (failure_count_ > failures_.size()) out["failures_total"] = failure_count_;
  if (!details_.empty()) out["details"] = details_;
  if (with_timing) out["ms"] = static_cast<long long>(ms_ + 0.5);
  return out;
}

}  // namespace polydist
