#pragma once

#include "cosym/graded_operator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cosym {

/// Outcome of one identity family, checked over all of its instances.
struct IdentityReport {
  std::string name;       // stable identifier, e.g. "lie.L_Lambda_H"
  std::string statement;  // the identity in words
  bool passed = false;
  int max_degree = 0;     // highest source degree compared
  std::string instance;   // the failing instance, e.g. "alpha=1 beta=2"
  std::optional<Witness> witness;
  std::string detail;     // extra context for failures
};

/// Overall verdict of a list of reports.
inline bool all_passed(const std::vector<IdentityReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace cosym
