#pragma once

#include <string>
#include <vector>

namespace arith {

inline constexpr const char* kToolVersion = "0.1.0";

// Verification output shared by the CLI commands: named checks with witness
// values; the overall verdict is the conjunction of the check statuses.
struct Report {
  std::string command;
  struct Check {
    std::string name;
    bool pass = false;
    std::string witness;
  };
  std::vector<Check> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  size_t failure_count() const {
    size_t n = 0;
    for (const auto& c : checks) n += c.pass ? 0 : 1;
    return n;
  }
};

}  // namespace arith
