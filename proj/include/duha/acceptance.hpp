#ifndef DUHA_ACCEPTANCE_HPP
#define DUHA_ACCEPTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "duha/verify.hpp"

namespace duha {

struct AcceptanceOptions {
  int jobs = 1;
  Window homology{0, 12};
  Window cohomology{-6, 12};
  Window duality{-6, 8};
  int algebra_max_deg = 16;
  int oracle_samples = 500;
  std::uint64_t seed = 20240607;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  std::string detail;
  /// Tables, erratum notes and failing entries backing the verdict.
  nlohmann::json evidence;
};

constexpr int kCriterionCount = 11;

/// Runs one criterion (1..11). Exceptions are caught and reported as failures.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// "criterion  3  FAIL  F2 non-root ...  (0.31 s)  detail"
std::string summary_line(const CriterionResult& r);
nlohmann::json to_json(const CriterionResult& r);

}  // namespace duha

#endif  // DUHA_ACCEPTANCE_HPP
