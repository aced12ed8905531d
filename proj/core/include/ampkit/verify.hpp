#pragma once

#include <string>
#include <vector>

#include "ampkit/scheme.hpp"

namespace ampkit::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  std::vector<Check> checks;
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Criterion ids run 1..9; names: quartic, scattering, schwinger, bose,
// hard_sphere, membrane, fixtures, pathologies, properties.
std::vector<int> criteria();
std::string criterion_name(int id);
CriterionResult run_criterion(int id);

// All criteria whose name contains `only` (all of them when empty).
std::vector<CriterionResult> run_all(const std::string& only = "");

}  // namespace ampkit::verify
