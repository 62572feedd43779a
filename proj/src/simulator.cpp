#include "hltasep/simulator.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hltasep {

bool apply_bulk_swap(SiteConfiguration& cfg, std::size_t x) {
  if (x < 1) throw std::invalid_argument("bulk swap site must be >= 1");
  if (x > cfg.extent()) return false;
  return cfg.swap_if_ordered(x);
}

SiteConfiguration::InjectionOutcome apply_injection(SiteConfiguration& cfg) { return cfg.inject(); }

void validate_rate(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("injection rate alpha must lie in (0,1), got " + std::to_string(alpha));
  }
}

void validate_horizon(double t_end, double t_now) {
  if (!std::isfinite(t_end)) throw std::invalid_argument("simulation horizon must be finite");
  if (t_end < t_now) {
    throw std::invalid_argument("simulation horizon " + std::to_string(t_end) + " lies before current time " +
                                std::to_string(t_now));
  }
}

}  // namespace hltasep
