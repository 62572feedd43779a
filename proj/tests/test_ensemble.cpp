#include "doctest.h"

#include <cmath>

#include "hltasep/ensemble.hpp"
#include "hltasep/exact_small.hpp"

using namespace hltasep;

namespace {

EnsembleSpec one_shock_spec(std::uint64_t replicas) {
  EnsembleSpec s;
  s.initial = OneShockSpec{1, 1, OneShockVariant::Eta};
  s.alpha = 0.4;
  s.times = {0.0, 2.0, 5.0};
  s.replicas = replicas;
  s.seed = 17;
  s.observables = {observables::second_class_status(), observables::height(Color::First, 1)};
  return s;
}

}  // namespace

TEST_CASE("spec validation") {
  auto s = one_shock_spec(1);
  s.replicas = 0;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s = one_shock_spec(1);
  s.times = {2.0, 1.0};
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s = one_shock_spec(1);
  s.alpha = 1.5;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s = one_shock_spec(1);
  s.observables.clear();
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
}

TEST_CASE("t = 0 gives the initial value") {
  auto s = one_shock_spec(1);
  s.times = {0.0};
  const auto r = run_ensemble(s);
  CHECK(r.value(0, 0, 0) == 2);
  CHECK(r.value(0, 0, 1) == 1);
}

TEST_CASE("parallel and serial runs agree bit for bit") {
  const auto s = one_shock_spec(2000);
  const auto a = run_ensemble(s);
  const auto b = run_ensemble_serial(s);
  CHECK(a.values == b.values);
  auto s2 = s;
  s2.workers = 3;
  CHECK(run_ensemble(s2).values == a.values);
}

TEST_CASE("split replica ranges merge into the full run") {
  const auto full = run_ensemble(one_shock_spec(1000));
  auto lo = one_shock_spec(400);
  auto hi = one_shock_spec(600);
  hi.first_replica = 400;
  auto merged = run_ensemble(lo).distribution(2, "f_status");
  merged.merge(run_ensemble(hi).distribution(2, "f_status"));
  CHECK(merged == full.distribution(2, "f_status"));
}

TEST_CASE("different seeds give different samples") {
  auto s = one_shock_spec(200);
  const auto a = run_ensemble(s);
  s.seed = 18;
  CHECK_FALSE(run_ensemble(s).values == a.values);
}

TEST_CASE("step current mean matches the exact oracle") {
  EnsembleSpec s;
  s.alpha = 0.5;
  s.times = {1.0};
  s.replicas = 100'000;
  s.seed = 5;
  s.observables = {observables::height(Color::First, 1)};
  const auto emp = run_ensemble(s).distribution(0, 0);

  const auto d = exact_distribution_small(SiteConfiguration{}, 0.5, 1.0, 14);
  const auto law = d.law([](const SiteConfiguration& c) { return height_count(c, Color::First, 1); });
  double mean = 0.0, second = 0.0;
  for (const auto& [k, p] : law) {
    mean += k * p;
    second += static_cast<double>(k) * k * p;
  }
  const double sd = std::sqrt((second - mean * mean) / static_cast<double>(emp.n));
  CHECK(std::abs(emp.mean() - mean) < 4.0 * sd + d.truncation_bound * 12);
}

TEST_CASE("observable errors propagate from workers") {
  auto s = one_shock_spec(10);
  s.initial = StepSpec{};
  s.times = {1.0};
  s.observables = {observables::second_class_status()};
  CHECK_THROWS_AS(run_ensemble(s), std::logic_error);
}
