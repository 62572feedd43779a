#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hltasep/observables.hpp"
#include "hltasep/stats.hpp"

namespace hltasep {

struct EnsembleSpec {
  InitialSpec initial = StepSpec{};
  double alpha = 0.5;
  std::vector<double> times;  // nonnegative, increasing
  std::uint64_t replicas = 1;
  std::uint64_t seed = 1;
  std::uint64_t first_replica = 0;  // replica r uses stream (seed, first_replica + r)
  std::vector<Observable> observables;
  int workers = 0;  // 0 = OpenMP default
};

void validate(const EnsembleSpec& spec);

/// Raw samples, value(r, i, j) = observable j at times[i] for replica r.
struct EnsembleResult {
  std::vector<double> times;
  std::vector<std::string> names;
  std::uint64_t first_replica = 0;
  std::uint64_t replicas = 0;
  std::vector<std::int64_t> values;

  std::int64_t value(std::uint64_t r, std::size_t i, std::size_t j) const {
    return values[(r * times.size() + i) * names.size() + j];
  }
  /// Empirical law of observable j at times[i].
  EmpiricalDistribution distribution(std::size_t i, std::size_t j) const;
  EmpiricalDistribution distribution(std::size_t i, const std::string& name) const;
};

/// Reference implementation: replicas one after another.
EnsembleResult run_ensemble_serial(const EnsembleSpec& spec);
/// Replicas spread over OpenMP threads; output is identical to the serial run.
EnsembleResult run_ensemble(const EnsembleSpec& spec);

/// Observables of one replica at the spec's times.
void run_replica(const EnsembleSpec& spec, std::uint64_t replica, std::int64_t* out);

}  // namespace hltasep
