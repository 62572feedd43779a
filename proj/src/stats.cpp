#include "hltasep/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include <boost/math/distributions/binomial.hpp>

namespace hltasep {

void EmpiricalDistribution::add(std::int64_t value, std::uint64_t count) {
  counts[value] += count;
  n += count;
}

void EmpiricalDistribution::merge(const EmpiricalDistribution& other) {
  for (const auto& [v, c] : other.counts) add(v, c);
}

double EmpiricalDistribution::frequency(std::int64_t value) const {
  if (n == 0) return 0.0;
  const auto it = counts.find(value);
  return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(n);
}

double EmpiricalDistribution::mean() const {
  if (n == 0) throw std::logic_error("mean of an empty distribution");
  long double s = 0.0;
  for (const auto& [v, c] : counts) s += static_cast<long double>(v) * c;
  return static_cast<double>(s / n);
}

double two_sided_p(double z) {
  if (!std::isfinite(z)) return 0.0;
  return std::erfc(std::abs(z) / std::sqrt(2.0));
}

double SignificancePolicy::family_level() const { return two_sided_p(sigma); }

std::string SignificancePolicy::describe() const {
  std::ostringstream s;
  s << "bonferroni-corrected " << sigma << " sigma (family level " << family_level() << ")";
  return s.str();
}

namespace {

void finalize(ComparisonReport& r, const SignificancePolicy& policy) {
  r.policy = policy.describe();
  const double B = static_cast<double>(std::max<std::size_t>(r.bins.size(), 1));
  for (const auto& b : r.bins) {
    r.max_abs_z = std::max(r.max_abs_z, std::abs(b.z));
    r.min_corrected_p = std::min(r.min_corrected_p, std::min(1.0, b.p_value * B));
  }
  r.pass = r.min_corrected_p >= policy.family_level();
}

/// Exact two-sided binomial p-value: twice the smaller tail, capped at 1.
double binomial_two_sided(std::uint64_t k, std::uint64_t n, double p) {
  if (p <= 0.0) return k == 0 ? 1.0 : 0.0;
  if (p >= 1.0) return k == n ? 1.0 : 0.0;
  const boost::math::binomial_distribution<double> d(static_cast<double>(n), p);
  const double lower = boost::math::cdf(d, static_cast<double>(k));
  const double upper = k == 0 ? 1.0 : boost::math::cdf(boost::math::complement(d, static_cast<double>(k - 1)));
  return std::min(1.0, 2.0 * std::min(lower, upper));
}

std::uint64_t count_of(const EmpiricalDistribution& d, std::int64_t v) {
  const auto it = d.counts.find(v);
  return it == d.counts.end() ? 0 : it->second;
}

void require_nonempty(const EmpiricalDistribution& d) {
  if (d.n == 0) throw std::invalid_argument("comparison needs a nonempty sample");
}

}  // namespace

ComparisonReport compare_empirical(const EmpiricalDistribution& a, const EmpiricalDistribution& b,
                                   const SignificancePolicy& policy) {
  require_nonempty(a);
  require_nonempty(b);
  std::set<std::int64_t> support;
  for (const auto& [v, c] : a.counts) support.insert(v);
  for (const auto& [v, c] : b.counts) support.insert(v);

  ComparisonReport r;
  const double na = static_cast<double>(a.n), nb = static_cast<double>(b.n);
  for (auto v : support) {
    BinReport bin;
    bin.value = v;
    bin.observed = a.frequency(v);
    bin.reference = b.frequency(v);
    const double pooled = (bin.observed * na + bin.reference * nb) / (na + nb);
    const double se = std::sqrt(pooled * (1.0 - pooled) * (1.0 / na + 1.0 / nb));
    bin.z = se > 0.0 ? (bin.observed - bin.reference) / se : 0.0;
    // conditional on the bin total, the first sample's share is binomial
    const std::uint64_t ka = count_of(a, v), kb = count_of(b, v);
    bin.p_value = binomial_two_sided(ka, ka + kb, na / (na + nb));
    r.bins.push_back(bin);
  }
  finalize(r, policy);
  return r;
}

ComparisonReport compare_to_exact(const EmpiricalDistribution& samples, const std::map<std::int64_t, double>& law,
                                  const SignificancePolicy& policy) {
  require_nonempty(samples);
  double total = 0.0;
  for (const auto& [v, p] : law) {
    if (p < -1e-12 || p > 1.0 + 1e-12) throw std::invalid_argument("law probabilities must lie in [0,1]");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("law must sum to 1");

  std::set<std::int64_t> support;
  for (const auto& [v, p] : law) {
    if (p > 0.0) support.insert(v);
  }
  for (const auto& [v, c] : samples.counts) support.insert(v);

  ComparisonReport r;
  const double n = static_cast<double>(samples.n);
  for (auto v : support) {
    BinReport bin;
    bin.value = v;
    bin.observed = samples.frequency(v);
    const auto it = law.find(v);
    bin.reference = it == law.end() ? 0.0 : std::clamp(it->second, 0.0, 1.0);
    const double se = std::sqrt(bin.reference * (1.0 - bin.reference) / n);
    if (se > 0.0) {
      bin.z = (bin.observed - bin.reference) / se;
    } else {
      bin.z = bin.observed == bin.reference ? 0.0 : std::numeric_limits<double>::infinity();
    }
    bin.p_value = binomial_two_sided(count_of(samples, v), samples.n, bin.reference);
    r.bins.push_back(bin);
  }
  finalize(r, policy);
  return r;
}

ComparisonReport ks_two_sample(const EmpiricalDistribution& a, const EmpiricalDistribution& b,
                               const SignificancePolicy& policy) {
  require_nonempty(a);
  require_nonempty(b);
  std::set<std::int64_t> support;
  for (const auto& [v, c] : a.counts) support.insert(v);
  for (const auto& [v, c] : b.counts) support.insert(v);

  ComparisonReport r;
  double fa = 0.0, fb = 0.0, d = 0.0;
  for (auto v : support) {
    fa += a.frequency(v);
    fb += b.frequency(v);
    d = std::max(d, std::abs(fa - fb));
    BinReport bin;
    bin.value = v;
    bin.observed = fa;
    bin.reference = fb;
    r.bins.push_back(bin);
  }
  const double na = static_cast<double>(a.n), nb = static_cast<double>(b.n);
  const double level = policy.family_level();
  const double c = std::sqrt(-std::log(level / 2.0) / 2.0);
  r.ks_statistic = d;
  r.ks_critical = c * std::sqrt((na + nb) / (na * nb));
  r.policy = "two-sample KS at level " + std::to_string(level);
  r.pass = d <= *r.ks_critical;
  return r;
}

nlohmann::json ComparisonReport::to_json() const {
  nlohmann::json j;
  j["pass"] = pass;
  j["policy"] = policy;
  j["max_abs_z"] = std::isfinite(max_abs_z) ? nlohmann::json(max_abs_z) : nlohmann::json("inf");
  j["min_corrected_p"] = min_corrected_p;
  if (ks_statistic) j["ks_statistic"] = *ks_statistic;
  if (ks_critical) j["ks_critical"] = *ks_critical;
  j["flags"] = flags;
  auto& arr = j["bins"] = nlohmann::json::array();
  for (const auto& b : bins) {
    arr.push_back({{"value", b.value},
                   {"observed", b.observed},
                   {"reference", b.reference},
                   {"z", std::isfinite(b.z) ? nlohmann::json(b.z) : nlohmann::json("inf")},
                   {"p", b.p_value}});
  }
  return j;
}

}  // namespace hltasep
