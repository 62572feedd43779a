#include "hltasep/poisson.hpp"

#include <cmath>
#include <stdexcept>

namespace hltasep {

namespace {

double log_pmf(double mean, std::size_t j) {
  if (mean == 0.0) return j == 0 ? 0.0 : -INFINITY;
  return -mean + static_cast<double>(j) * std::log(mean) - std::lgamma(static_cast<double>(j) + 1.0);
}

}  // namespace

double poisson_upper_tail(double mean, std::size_t k) {
  if (mean < 0.0) throw std::invalid_argument("Poisson mean must be nonnegative");
  if (k == 0) return 1.0;
  if (mean == 0.0) return 0.0;
  if (static_cast<double>(k) <= mean) {
    double below = 0.0;
    for (std::size_t j = 0; j < k; ++j) below += std::exp(log_pmf(mean, j));
    return below >= 1.0 ? 0.0 : 1.0 - below;
  }
  // Terms decrease geometrically once j > mean.
  double sum = 0.0;
  double term = std::exp(log_pmf(mean, k));
  for (std::size_t j = k; term > 0.0; ++j) {
    sum += term;
    term *= mean / static_cast<double>(j + 1);
    if (term < sum * 1e-18) break;
  }
  return sum;
}

PoissonWeights poisson_weights(double mean, double tail_tolerance) {
  if (!(tail_tolerance > 0.0)) throw std::invalid_argument("tail tolerance must be positive");
  PoissonWeights out;
  for (std::size_t j = 0;; ++j) {
    out.weights.push_back(std::exp(log_pmf(mean, j)));
    const double tail = poisson_upper_tail(mean, j + 1);
    if (tail < tail_tolerance && static_cast<double>(j) >= mean) {
      out.tail = tail;
      break;
    }
    if (j > 100000) throw std::runtime_error("Poisson truncation did not converge");
  }
  return out;
}

}  // namespace hltasep
