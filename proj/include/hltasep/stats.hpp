#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace hltasep {

struct EmpiricalDistribution {
  std::map<std::int64_t, std::uint64_t> counts;
  std::uint64_t n = 0;

  void add(std::int64_t value, std::uint64_t count = 1);
  void merge(const EmpiricalDistribution& other);
  double frequency(std::int64_t value) const;
  double mean() const;
  friend bool operator==(const EmpiricalDistribution&, const EmpiricalDistribution&) = default;
};

/// Per-bin two-sided p-values, Bonferroni-corrected over the bins; a
/// comparison fails iff the smallest corrected p-value is below the two-sided
/// tail mass beyond `sigma` standard deviations.
struct SignificancePolicy {
  double sigma = 4.0;

  double family_level() const;  // 2 * Phi(-sigma)
  std::string describe() const;
};

struct BinReport {
  std::int64_t value = 0;
  double observed = 0.0;   // frequency in the first sample
  double reference = 0.0;  // frequency in the second sample, or the exact probability
  double z = 0.0;
  double p_value = 1.0;
};

struct ComparisonReport {
  std::vector<BinReport> bins;
  double max_abs_z = 0.0;
  double min_corrected_p = 1.0;
  std::optional<double> ks_statistic;
  std::optional<double> ks_critical;
  bool pass = true;
  std::string policy;
  std::vector<std::string> flags;

  nlohmann::json to_json() const;
};

/// Per-bin exact two-sample tests (binomial split of the bin total); the
/// pooled-proportion z is reported alongside.
ComparisonReport compare_empirical(const EmpiricalDistribution& a, const EmpiricalDistribution& b,
                                   const SignificancePolicy& policy = {});

/// Per-bin exact binomial tests against exact probabilities; the normal z is
/// reported alongside.
ComparisonReport compare_to_exact(const EmpiricalDistribution& samples, const std::map<std::int64_t, double>& law,
                                  const SignificancePolicy& policy = {});

/// Two-sample Kolmogorov-Smirnov test; the critical value is the asymptotic
/// one at the policy's family level.
ComparisonReport ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b,
                               const SignificancePolicy& policy = {});

/// Normal two-sided p-value of |z|.
double two_sided_p(double z);

}  // namespace hltasep
