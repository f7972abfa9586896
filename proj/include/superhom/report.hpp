#pragma once

#include <string>
#include <vector>

namespace superhom {

/// Outcome of one named verification, with the first counterexample found.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

/// A list of checks; passes iff every check passed.
struct CheckReport {
  std::vector<Check> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  void pass(std::string name) { checks.push_back({std::move(name), true, {}}); }
  void fail(std::string name, std::string witness) { checks.push_back({std::move(name), false, std::move(witness)}); }
  void add(std::string name, bool ok, std::string witness = {}) {
    checks.push_back({std::move(name), ok, ok ? std::string{} : std::move(witness)});
  }
  void append(const CheckReport& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.witness});
  }
  /// First failing check's name and witness, or empty.
  std::string first_failure() const {
    for (const auto& c : checks)
      if (!c.passed) return c.name + ": " + c.witness;
    return {};
  }
};

}  // namespace superhom
