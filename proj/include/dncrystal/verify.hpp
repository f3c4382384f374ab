#pragma once

#include <string>
#include <vector>

#include "dncrystal/algebra.hpp"

namespace dncrystal {

struct SuiteReport {
  std::string name;
  long checks = 0;
  long failures = 0;
  std::string first_failure;  // minimal counterexample, empty when clean

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  bool ok() const { return failures == 0; }
};

/// Commutation of psi with every operator and statistic over B^l.
SuiteReport verify_psi(const AlgebraParams& p);
/// Tail telescoping: explicit extra ground columns and truncated naive tails agree.
SuiteReport verify_signature(const AlgebraParams& p, int depth = 4);
/// Ground walls and paths for every dominant weight of level 1..max(l, 2).
SuiteReport verify_ground(const AlgebraParams& p);
/// Crystal axioms on coordinates, slice classes, walls and paths.
SuiteReport verify_axioms(const AlgebraParams& p, int depth = 4);

}  // namespace dncrystal
