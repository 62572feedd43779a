#pragma once

#include <cstddef>
#include <vector>

namespace hltasep {

/// P(Poisson(mean) >= k), summed from the upper side so tiny tails keep their
/// relative accuracy.
double poisson_upper_tail(double mean, std::size_t k);

/// Poisson(mean) probabilities w_0..w_K with K the first index whose remaining
/// tail mass is below tail_tolerance.
struct PoissonWeights {
  std::vector<double> weights;
  double tail = 0.0;
};
PoissonWeights poisson_weights(double mean, double tail_tolerance);

}  // namespace hltasep
