#include "hltasep/exact_small.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "hltasep/poisson.hpp"
#include "hltasep/simulator.hpp"

namespace hltasep {

namespace {

constexpr std::size_t kMaxCap = 28;
constexpr std::uint32_t kMaxExited = 15;
constexpr std::uint32_t kKilled = std::numeric_limits<std::uint32_t>::max();

std::uint64_t encode(const SiteConfiguration& cfg, std::size_t cap) {
  std::uint64_t key = 0;
  for (std::size_t x = 1; x <= cap; ++x) {
    key |= static_cast<std::uint64_t>(rank(cfg.at(x)) - 1) << (2 * (x - 1));
  }
  const std::uint32_t e2 = cfg.exited_count(Color::Second);
  const std::uint32_t e3 = cfg.exited_count(Color::Third);
  if (e2 > kMaxExited || e3 > kMaxExited) throw std::runtime_error("exact oracle: too many exited particles");
  key |= static_cast<std::uint64_t>(e2) << 56;
  key |= static_cast<std::uint64_t>(e3) << 60;
  return key;
}

SiteConfiguration decode(std::uint64_t key, std::size_t cap) {
  std::vector<Color> window(cap);
  for (std::size_t x = 1; x <= cap; ++x) {
    window[x - 1] = static_cast<Color>(((key >> (2 * (x - 1))) & 3U) + 1);
  }
  while (!window.empty() && window.back() == Color::Hole) window.pop_back();
  SiteConfiguration cfg(std::move(window));
  cfg.add_exited(Color::Second, static_cast<std::uint32_t>((key >> 56) & 15U));
  cfg.add_exited(Color::Third, static_cast<std::uint32_t>((key >> 60) & 15U));
  return cfg;
}

struct Move {
  std::uint32_t target;
  double rate;
};

}  // namespace

double ExactDistribution::probability_of(const SiteConfiguration& cfg) const {
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i] == cfg) return probabilities[i];
  }
  return 0.0;
}

ExactDistribution exact_distribution_small(const SiteConfiguration& cfg0, double alpha, double t,
                                           std::size_t site_cap, const ExactSmallOptions& options) {
  validate_rate(alpha);
  if (!std::isfinite(t) || t < 0.0) throw std::invalid_argument("exact oracle: time must be finite and >= 0");
  if (site_cap < 1 || site_cap > kMaxCap) {
    throw std::invalid_argument("exact oracle: site_cap must lie in [1, " + std::to_string(kMaxCap) + "]");
  }
  for (std::size_t x = site_cap + 1; x <= cfg0.extent(); ++x) {
    if (cfg0.at(x) != Color::Hole) throw std::invalid_argument("exact oracle: initial particle beyond site_cap");
  }

  ExactDistribution out;
  out.site_cap = site_cap;

  // Certified truncation: a particle's right jumps are dominated by a rate-1
  // Poisson count, injections by a rate-alpha Poisson count.
  const double half_budget = options.tolerance / 2.0;
  double escape = 0.0;
  for (std::size_t x = 1; x <= cfg0.extent(); ++x) {
    if (cfg0.at(x) != Color::Hole) escape += poisson_upper_tail(t, site_cap + 1 - x);
  }
  escape += alpha * t * poisson_upper_tail(t, site_cap);
  std::size_t inj_cap = 0;
  while (poisson_upper_tail(alpha * t, inj_cap + 1) > half_budget / 2.0) ++inj_cap;
  escape += poisson_upper_tail(alpha * t, inj_cap + 1);
  out.injection_cap = inj_cap;

  const double lambda = alpha + static_cast<double>(site_cap);
  const PoissonWeights pw = poisson_weights(lambda * t, half_budget);
  out.truncation_bound = escape + pw.tail;
  if (out.truncation_bound > options.tolerance) {
    std::ostringstream msg;
    msg << "exact oracle: truncation bound " << out.truncation_bound << " exceeds tolerance " << options.tolerance
        << "; raise site_cap";
    throw std::runtime_error(msg.str());
  }

  const std::uint32_t first_cap = cfg0.window_count(Color::First) + static_cast<std::uint32_t>(inj_cap);

  std::unordered_map<std::uint64_t, std::uint32_t> index;
  std::vector<std::uint64_t> keys;
  std::vector<std::vector<Move>> moves;
  std::deque<std::uint32_t> frontier;

  auto intern = [&](std::uint64_t key) -> std::uint32_t {
    auto [it, inserted] = index.emplace(key, static_cast<std::uint32_t>(keys.size()));
    if (inserted) {
      if (keys.size() >= options.max_states) {
        throw std::runtime_error("exact oracle: reachable state space exceeds " + std::to_string(options.max_states));
      }
      keys.push_back(key);
      moves.emplace_back();
      frontier.push_back(it->second);
    }
    return it->second;
  };

  intern(encode(cfg0, site_cap));
  while (!frontier.empty()) {
    const std::uint32_t s = frontier.front();
    frontier.pop_front();
    const SiteConfiguration cfg = decode(keys[s], site_cap);
    std::vector<Move> out_moves;

    SiteConfiguration injected = cfg;
    if (injected.inject().applied) {
      if (injected.window_count(Color::First) > first_cap) {
        out_moves.push_back({kKilled, alpha});
      } else {
        out_moves.push_back({intern(encode(injected, site_cap)), alpha});
      }
    }
    for (std::size_t x = 1; x <= site_cap; ++x) {
      if (x == site_cap) {
        if (cfg.at(x) != Color::Hole) out_moves.push_back({kKilled, 1.0});
        continue;
      }
      if (!(cfg.at(x) < cfg.at(x + 1))) continue;
      SiteConfiguration swapped = cfg;
      swapped.swap_if_ordered(x);
      out_moves.push_back({intern(encode(swapped, site_cap)), 1.0});
    }
    moves[s] = std::move(out_moves);
  }

  const std::size_t n = keys.size();
  std::vector<double> v(n, 0.0), next(n, 0.0), acc(n, 0.0);
  v[0] = 1.0;
  for (std::size_t k = 0; k < pw.weights.size(); ++k) {
    for (std::size_t s = 0; s < n; ++s) acc[s] += pw.weights[k] * v[s];
    if (k + 1 == pw.weights.size()) break;
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t s = 0; s < n; ++s) {
      if (v[s] == 0.0) continue;
      double out_rate = 0.0;
      for (const Move& m : moves[s]) {
        out_rate += m.rate;
        if (m.target != kKilled) next[m.target] += v[s] * m.rate / lambda;
      }
      next[s] += v[s] * (1.0 - out_rate / lambda);
    }
    std::swap(v, next);
  }

  double total = 0.0;
  out.states.reserve(n);
  out.probabilities.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (acc[s] <= 0.0) continue;
    out.states.push_back(decode(keys[s], site_cap));
    out.probabilities.push_back(acc[s]);
    total += acc[s];
  }
  out.lost_mass = std::max(0.0, 1.0 - total);
  return out;
}

}  // namespace hltasep
