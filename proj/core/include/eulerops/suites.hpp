#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "eulerops/fiber_poly.hpp"
#include "eulerops/structure.hpp"

namespace eulerops::suites {

struct SuiteConfig {
  std::uint64_t seed = 42;
  // Base case count. Suites that check 100 (or 50, 20) cases use
  // cases / 2 (cases / 4, cases / 10).
  std::uint32_t cases = 200;
  BundleModel model{2, 2};
  std::uint32_t max_order = 3;
  std::uint32_t coeff_degree = 3;
  std::uint32_t degree_bound = kDefaultDegreeBound;
};

struct SuiteFailure {
  std::string check;
  std::string input;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string name;
  std::string title;
  std::uint64_t cases_run = 0;
  std::vector<SuiteFailure> failures;
  double wall_seconds = 0.0;

  bool passed() const { return failures.empty(); }
};

struct SuiteInfo {
  std::string name;
  std::string title;
  std::function<SuiteReport(const SuiteConfig&)> run;
};

// In acceptance-criterion order.
const std::vector<SuiteInfo>& registry();
// Throws std::out_of_range for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

struct CorpusEntry {
  std::string label;
  AlgebraMorphism morphism;
};

struct ViolatingEntry {
  std::string label;
  AlgebraMorphism morphism;
  // Whether some x-only monomial leaves A^0 under the map.
  bool breaks_degree_zero;
};

// Invertible substitutions of the m = n = 2 model, each with its inverse.
std::vector<CorpusEntry> invertible_corpus();
// Substitutions that raise the filtration degree.
std::vector<ViolatingEntry> violating_corpus();

}  // namespace eulerops::suites
