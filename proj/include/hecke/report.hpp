#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hecke {

/// One failed identity: the (lambda, beta) cell and both sides as text.
struct Failure {
  std::string lambda;
  std::string beta;
  std::string lhs;
  std::string rhs;
};

/// Outcome of a verification run. `checked` counts the identities tested;
/// `notes` carries reported (not asserted) observations in insertion order.
struct Report {
  Report() = default;
  Report(std::string check_name, int size) : check(std::move(check_name)), n(size) {}

  std::string check;
  int n = 0;
  std::size_t checked = 0;
  std::vector<Failure> failures;
  std::vector<std::pair<std::string, std::string>> notes;

  bool passed() const noexcept { return failures.empty(); }
  std::string status() const { return passed() ? "pass" : "fail"; }
  void note(std::string key, std::string value) {
    notes.emplace_back(std::move(key), std::move(value));
  }
  void fail(std::string lambda, std::string beta, std::string lhs, std::string rhs) {
    failures.push_back({std::move(lambda), std::move(beta), std::move(lhs), std::move(rhs)});
  }
  /// Records the identity; on mismatch stores a failure.
  template <class T>
  void expect_equal(const std::string& lambda, const std::string& beta, const T& lhs,
                    const T& rhs) {
    ++checked;
    if (!(lhs == rhs)) fail(lambda, beta, lhs.to_string(), rhs.to_string());
  }
  /// Merges another report's counts and failures into this one.
  void absorb(const Report& other);
};

}  // namespace hecke
