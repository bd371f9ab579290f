#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hocolim/random.hpp"

namespace suites {

struct SuiteConfig {
  std::uint64_t seed = 42;
  bool parallel = true;
  std::size_t enum_cap = 1000000;
  /// Bounds for the random complex-level diagrams.
  hocolim::GenBounds bounds{};
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;  // first failure, or a short summary

  /// "[PASS] 3 tree creation: 101 cases, 0 failures, 0.84 s (budget 30 s)"
  std::string line() const;
};

CriterionResult colimit_oracle(const SuiteConfig& cfg);          // 1
CriterionResult universal_property(const SuiteConfig& cfg);      // 2
CriterionResult tree_creation(const SuiteConfig& cfg);           // 3
CriterionResult circle_dichotomy(const SuiteConfig& cfg);        // 4
CriterionResult constructions_agree(const SuiteConfig& cfg);     // 5
CriterionResult universality(const SuiteConfig& cfg);            // 6
CriterionResult factorization_system(const SuiteConfig& cfg);    // 7
CriterionResult preservation(const SuiteConfig& cfg);            // 8
CriterionResult weak_limit(const SuiteConfig& cfg);              // 9
CriterionResult homology_sanity(const SuiteConfig& cfg);         // 10
CriterionResult truncation(const SuiteConfig& cfg);              // 11

std::vector<CriterionResult> run_all(const SuiteConfig& cfg);

}  // namespace suites
