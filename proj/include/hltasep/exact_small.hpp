#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "hltasep/configuration.hpp"

namespace hltasep {

struct ExactSmallOptions {
  double tolerance = 1e-10;  // allowed total-variation truncation error
  std::size_t max_states = 1'000'000;
};

/// Law of the process at time t restricted to configurations with no particle
/// beyond site_cap. truncation_bound is a rigorous total-variation bound
/// (escape union bound + injection-count cap + uniformization tail);
/// lost_mass is the probability actually removed by the truncation.
struct ExactDistribution {
  std::vector<SiteConfiguration> states;
  std::vector<double> probabilities;
  double truncation_bound = 0.0;
  double lost_mass = 0.0;
  std::size_t site_cap = 0;
  std::size_t injection_cap = 0;

  template <class Observable>
  std::map<std::int64_t, double> law(Observable&& observable) const {
    std::map<std::int64_t, double> out;
    for (std::size_t i = 0; i < states.size(); ++i) out[observable(states[i])] += probabilities[i];
    return out;
  }

  double probability_of(const SiteConfiguration& cfg) const;
};

/// Exact transient distribution by uniformization of the generator truncated
/// to sites 1..site_cap. Throws std::runtime_error when the certified bound
/// exceeds options.tolerance or the state space exceeds options.max_states.
ExactDistribution exact_distribution_small(const SiteConfiguration& cfg0, double alpha, double t,
                                           std::size_t site_cap, const ExactSmallOptions& options = {});

}  // namespace hltasep
