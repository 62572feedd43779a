#include "hltasep/ensemble.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>

#include <omp.h>

#include "hltasep/simulator.hpp"

namespace hltasep {

void validate(const EnsembleSpec& spec) {
  validate_rate(spec.alpha);
  if (spec.replicas < 1) throw std::invalid_argument("replicas must be >= 1");
  if (spec.times.empty()) throw std::invalid_argument("at least one observation time is required");
  double prev = 0.0;
  for (double t : spec.times) {
    if (!std::isfinite(t) || t < prev) throw std::invalid_argument("times must be finite, nonnegative and increasing");
    prev = t;
  }
  if (spec.observables.empty()) throw std::invalid_argument("at least one observable is required");
  if (spec.workers < 0) throw std::invalid_argument("workers must be >= 0");
}

void run_replica(const EnsembleSpec& spec, std::uint64_t replica, std::int64_t* out) {
  SiteConfiguration cfg = build_initial(spec.initial);
  SimulationClock clock(spec.seed, replica);
  for (double t : spec.times) {
    simulate_until(cfg, spec.alpha, t, clock);
    for (const auto& obs : spec.observables) *out++ = obs.evaluate(cfg);
  }
}

namespace {

EnsembleResult empty_result(const EnsembleSpec& spec) {
  EnsembleResult r;
  r.times = spec.times;
  for (const auto& o : spec.observables) r.names.push_back(o.name);
  r.first_replica = spec.first_replica;
  r.replicas = spec.replicas;
  r.values.resize(spec.replicas * spec.times.size() * spec.observables.size());
  return r;
}

}  // namespace

EnsembleResult run_ensemble_serial(const EnsembleSpec& spec) {
  validate(spec);
  EnsembleResult r = empty_result(spec);
  const std::size_t stride = spec.times.size() * spec.observables.size();
  for (std::uint64_t i = 0; i < spec.replicas; ++i) {
    run_replica(spec, spec.first_replica + i, r.values.data() + i * stride);
  }
  return r;
}

EnsembleResult run_ensemble(const EnsembleSpec& spec) {
  validate(spec);
  EnsembleResult r = empty_result(spec);
  const std::size_t stride = spec.times.size() * spec.observables.size();
  const int threads = spec.workers > 0 ? spec.workers : omp_get_max_threads();
  const auto n = static_cast<std::int64_t>(spec.replicas);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      run_replica(spec, spec.first_replica + static_cast<std::uint64_t>(i),
                  r.values.data() + static_cast<std::size_t>(i) * stride);
    } catch (...) {
#pragma omp critical(hltasep_ensemble_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return r;
}

EmpiricalDistribution EnsembleResult::distribution(std::size_t i, std::size_t j) const {
  if (i >= times.size() || j >= names.size()) throw std::out_of_range("EnsembleResult: index out of range");
  EmpiricalDistribution d;
  for (std::uint64_t rep = 0; rep < replicas; ++rep) d.add(value(rep, i, j));
  return d;
}

EmpiricalDistribution EnsembleResult::distribution(std::size_t i, const std::string& name) const {
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (names[j] == name) return distribution(i, j);
  }
  throw std::out_of_range("EnsembleResult: no observable named '" + name + "'");
}

}  // namespace hltasep
