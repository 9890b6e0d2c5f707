#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kronhwv {

/// Outcome of a verification sweep. Only the first kMaxListed violations are
/// kept verbatim; violation_count has the total.
struct Report {
  static constexpr std::size_t kMaxListed = 10;

  std::string claim;
  std::uint64_t checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<std::string> violations;
  std::vector<std::pair<std::string, std::string>> details;
  double elapsed_ms = 0;

  bool pass() const { return violation_count == 0; }

  void check(bool ok, const std::string& what) {
    ++checked;
    if (!ok) violation(what);
  }
  void violation(const std::string& what) {
    ++violation_count;
    if (violations.size() < kMaxListed) violations.push_back(what);
  }
  void detail(std::string key, std::string value) {
    details.emplace_back(std::move(key), std::move(value));
  }

  /// Adds the counts and violations of another report for the same claim.
  void merge(const Report& o) {
    checked += o.checked;
    violation_count += o.violation_count;
    for (const auto& v : o.violations)
      if (violations.size() < kMaxListed) violations.push_back(v);
    for (const auto& d : o.details) details.push_back(d);
    elapsed_ms += o.elapsed_ms;
  }
};

/// Wall-clock stopwatch in milliseconds.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace kronhwv
