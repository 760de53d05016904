#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfq/entanglement.hpp"

namespace hopfq {

struct CheckConfig {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  // Passed to minor_measure in the minor_measure/e_avg suite.
  double minor_normalization = kMinorMeasureNormalization;
};

struct SuiteResult {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t total = 0;
  // First failing trial, serialized; a suite stops at its first failure.
  std::optional<std::string> counterexample;

  bool ok() const { return !counterexample; }
};

struct CheckSummary {
  std::vector<SuiteResult> suites;

  bool ok() const;
  const SuiteResult* first_failure() const;
};

// Algebra identities, map consistencies and measure identities on random
// inputs. Deterministic for a fixed config.
CheckSummary run_checks(const CheckConfig& config);

}  // namespace hopfq
