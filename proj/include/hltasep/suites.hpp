#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hltasep/stats.hpp"

namespace hltasep {

struct SuiteOptions {
  std::uint64_t seed = 20240611;
  double replica_scale = 1.0;  // multiplies every Monte Carlo replica count below
  int workers = 0;
  SignificancePolicy policy;
  std::uint64_t identity_replicas = 100'000;  // per side and time
  std::uint64_t law_replicas = 100'000;       // per observable and time
  std::uint64_t oracle_replicas = 1'000'000;
  std::uint64_t kpz_replicas = 10'000;        // per side

  std::uint64_t scaled(std::uint64_t n) const;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  nlohmann::json data;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::vector<CheckResult> checks;
  std::vector<std::string> flags;
  double seconds = 0.0;

  std::string summary() const;
  nlohmann::json to_json() const;
};

/// Flag attached to every result that relies on the matrix-product measure
/// being the alpha > 1/2 limit of the step process.
inline constexpr const char* kMpaLimitFlag = "assumes_mpa_stationary_limit";

CriterionResult criterion_dehp_oracle(const SuiteOptions& o);       // 1
CriterionResult criterion_stationary_structure(const SuiteOptions& o);  // 2
CriterionResult criterion_cluster_example(const SuiteOptions& o);   // 3
CriterionResult criterion_tree_example(const SuiteOptions& o);      // 4
CriterionResult criterion_hecke_symmetry(const SuiteOptions& o);    // 5
CriterionResult criterion_finite_time_identities(const SuiteOptions& o);  // 6
CriterionResult criterion_laws_low_density(const SuiteOptions& o);  // 7
CriterionResult criterion_laws_max_current(const SuiteOptions& o);  // 8
CriterionResult criterion_small_oracle(const SuiteOptions& o);      // 9
CriterionResult criterion_kpz_consistency(const SuiteOptions& o);   // 10
/// Finite-time identities checked exactly on small instances.
CriterionResult check_exact_identities(const SuiteOptions& o);

using CriterionFn = std::function<CriterionResult(const SuiteOptions&)>;

/// All acceptance criteria in order 1..10.
std::vector<CriterionFn> acceptance_criteria();

const std::vector<std::string>& suite_names();
/// Criteria grouped by suite: dehp-oracle, hecke, identities3x, laws42, kpz-internal.
std::vector<CriterionFn> suite(const std::string& name);

}  // namespace hltasep
