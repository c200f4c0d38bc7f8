#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "logder/arrangement.hpp"

namespace logder {

struct SuiteRow {
  std::string check;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct CriterionInfo {
  int id = 0;
  std::string name;
  std::string title;
};

struct CriterionResult {
  CriterionInfo info;
  std::vector<SuiteRow> rows;
  double seconds = 0;

  bool pass() const;
};

struct SuiteOptions {
  /// Replaces the added form x1 - x2 + 2x3 - 2x4 of ex-4.2 by
  /// x1 - x2 + 2x3 - 3x4, to confirm that the rows notice.
  bool perturb = false;
  std::size_t random_cases = 1000;
  std::uint64_t seed = 20240613;
};

std::vector<CriterionInfo> suite_criteria();
/// Throws Error for an unknown id.
CriterionResult run_criterion(int id, const SuiteOptions& options = {});

/// corpus(name).arrangement, with the perturbation applied when requested.
Arrangement suite_arrangement(const std::string& name, const SuiteOptions& options);

/// Every random arrangement of the property sweep: l = 3, 4 to 7 forms with
/// entries in [-2, 2], essential, pairwise non-proportional.
std::vector<Arrangement> random_arrangements(std::size_t count, std::uint64_t seed);

struct PropertyTally {
  std::string property;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string first_violation;
};

/// Checks the structural theorems on A and on every (A, H): Saito's
/// criterion, sum of exponents, factorization of chi, the deletion-
/// restriction recurrence, surjectivity of the Euler restriction, addition,
/// the SPOG criterion in both directions, free deletion implies SPOG,
/// g(A) <= 2l - 2, g = l + 1 implies SPOG, g <= l + 2 implies free A^H,
/// pd <= 1 and the SPOG generator construction. Tallies accumulate.
void check_properties(const Arrangement& a, const std::string& label, std::vector<PropertyTally>& tallies);

}  // namespace logder
