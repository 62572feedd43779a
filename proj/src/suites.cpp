#include "hltasep/suites.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include "hltasep/dehp.hpp"
#include "hltasep/ensemble.hpp"
#include "hltasep/exact_laws.hpp"
#include "hltasep/exact_small.hpp"
#include "hltasep/hecke.hpp"
#include "hltasep/observables.hpp"
#include "hltasep/rng.hpp"

namespace hltasep {

std::uint64_t SuiteOptions::scaled(std::uint64_t n) const {
  if (!(replica_scale > 0.0)) throw std::invalid_argument("replica_scale must be positive");
  const double v = std::round(static_cast<double>(n) * replica_scale);
  return v < 1.0 ? 1 : static_cast<std::uint64_t>(v);
}

std::string CriterionResult::summary() const {
  std::ostringstream s;
  s << (pass ? "PASS" : "FAIL") << "  criterion " << id << ": " << name;
  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.pass;
  s << " [" << passed << "/" << checks.size() << " checks";
  for (const auto& f : flags) s << ", " << f;
  s << ", " << std::round(seconds * 10.0) / 10.0 << " s]";
  return s.str();
}

nlohmann::json CriterionResult::to_json() const {
  nlohmann::json j{{"id", id}, {"name", name}, {"pass", pass}, {"flags", flags}, {"seconds", seconds}};
  auto& arr = j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"data", c.data}});
  }
  return j;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Recorder {
  CriterionResult result;
  Clock::time_point start = Clock::now();

  Recorder(int id, std::string name) {
    result.id = id;
    result.name = std::move(name);
  }

  void add(std::string name, bool pass, std::string detail, nlohmann::json data = {}) {
    result.checks.push_back({std::move(name), pass, std::move(detail), std::move(data)});
  }

  void add(std::string name, const ComparisonReport& r) {
    std::ostringstream s;
    if (r.ks_statistic) {
      s << "D=" << *r.ks_statistic << " crit=" << *r.ks_critical;
    } else {
      s << "max|z|=" << r.max_abs_z << " min corrected p=" << r.min_corrected_p;
    }
    add(std::move(name), r.pass, s.str(), r.to_json());
  }

  CriterionResult finish() {
    result.pass = !result.checks.empty();
    for (const auto& c : result.checks) result.pass = result.pass && c.pass;
    result.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return result;
  }
};

/// Independent stream per ensemble so that the two sides of a comparison never
/// share random numbers.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
  std::uint64_t s = base ^ (tag * 0x9E3779B97F4A7C15ULL);
  return splitmix64(s);
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(6);
  s << v;
  return s.str();
}

const std::vector<Rational>& mpa_alphas() {
  static const std::vector<Rational> v{Rational(3, 5), Rational(3, 4), Rational(9, 10)};
  return v;
}

}  // namespace

CriterionResult criterion_dehp_oracle(const SuiteOptions&) {
  Recorder rec(1, "matrix-product cylinder probabilities equal the rewrite oracle, L <= 10");
  for (const auto& alpha : mpa_alphas()) {
    std::int64_t words = 0, mismatches = 0, layered_mismatches = 0;
    for (int L = 1; L <= 10; ++L) {
      const std::int64_t total = std::int64_t{1} << L;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : words, mismatches, layered_mismatches)
      for (std::int64_t mask = 0; mask < total; ++mask) {
        const auto eta = BinaryWord::from_mask(static_cast<std::uint64_t>(mask), L);
        const auto p = stationary_prob(eta, alpha);
        mismatches += (p.value != rewrite_oracle(eta, alpha)) || !p.assumes_mpa_limit;
        layered_mismatches += dehp_partition(eta, alpha).Z != dehp_partition_layered(eta, alpha).Z;
        ++words;
      }
    }
    rec.add("alpha=" + to_string(alpha), mismatches == 0 && layered_mismatches == 0,
            std::to_string(words) + " words, " + std::to_string(mismatches) + " oracle mismatches, " +
                std::to_string(layered_mismatches) + " layered-DP mismatches");
  }
  rec.result.flags.push_back(kMpaLimitFlag);
  return rec.finish();
}

CriterionResult criterion_stationary_structure(const SuiteOptions&) {
  Recorder rec(2, "normalization, Kolmogorov consistency and continuity at alpha = 1/2");
  const std::vector<Rational> alphas{Rational(1, 5), Rational(2, 5), Rational(1, 2), Rational(3, 5), Rational(3, 4),
                                     Rational(9, 10)};
  for (const auto& alpha : alphas) {
    std::int64_t bad_norm = 0, bad_kolmogorov = 0;
    for (int L = 1; L <= 9; ++L) {
      const std::int64_t total = std::int64_t{1} << L;
      Rational sum = 0;
      std::vector<Rational> probs(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : bad_kolmogorov)
      for (std::int64_t mask = 0; mask < total; ++mask) {
        const auto eta = BinaryWord::from_mask(static_cast<std::uint64_t>(mask), L);
        const Rational p = stationary_prob(eta, alpha).value;
        probs[static_cast<std::size_t>(mask)] = p;
        const Rational split = stationary_prob(eta.appended(0), alpha).value + stationary_prob(eta.appended(1), alpha).value;
        bad_kolmogorov += split != p || p < 0 || p > 1;
      }
      for (const auto& p : probs) sum += p;
      bad_norm += sum != 1;
    }
    rec.add("alpha=" + to_string(alpha), bad_norm == 0 && bad_kolmogorov == 0,
            std::to_string(bad_norm) + " lengths failing normalization, " + std::to_string(bad_kolmogorov) +
                " words failing consistency or bounds (L <= 9)");
  }
  std::int64_t bad_continuity = 0, words = 0;
  const Rational half(1, 2);
  for (int L = 1; L <= 10; ++L) {
    const std::int64_t total = std::int64_t{1} << L;
    Rational expected = 1;
    for (int i = 0; i < L; ++i) expected /= 2;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : bad_continuity, words)
    for (std::int64_t mask = 0; mask < total; ++mask) {
      const auto eta = BinaryWord::from_mask(static_cast<std::uint64_t>(mask), L);
      bad_continuity += mpa_prob(eta, half) != expected;
      ++words;
    }
  }
  rec.add("matrix-product formula at alpha=1/2", bad_continuity == 0,
          std::to_string(words) + " words, " + std::to_string(bad_continuity) + " differ from 2^-L");
  rec.result.flags.push_back(kMpaLimitFlag);
  return rec.finish();
}

CriterionResult criterion_cluster_example(const SuiteOptions&) {
  Recorder rec(3, "cluster statistics of 001001101100");
  const auto st = cluster_stats(BinaryWord::parse("001001101100"));
  const bool ok = st.ell == 5 && st.A == 3 && st.sigma == std::vector<int>{1, 2, 2} &&
                  st.tau == std::vector<int>{2, 2, 1, 2} && st.Psi == std::vector<int>{5, 4, 2, 0} &&
                  st.Phi == std::vector<int>{7, 5, 3, 2, 0};
  nlohmann::json data{{"ell", st.ell}, {"A", st.A}, {"sigma", st.sigma}, {"tau", st.tau}, {"Psi", st.Psi},
                      {"Phi", st.Phi}};
  rec.add("cluster_stats", ok, data.dump(), data);
  return rec.finish();
}

CriterionResult criterion_tree_example(const SuiteOptions&) {
  Recorder rec(4, "partition functions of the tree of DEE");
  for (const auto& alpha : {Rational(3, 5), Rational(3, 4)}) {
    const Rational c(1, 4);
    const Rational ca = c / alpha;
    const auto pv = dehp_partition(BinaryWord::parse("100"), alpha);
    const bool ok = pv.Z.size() == 2 && pv.Z[1] == c * c && pv.Z[0] == c * c * ca + c * ca * ca;
    std::string detail = "Z=(";
    for (std::size_t k = 0; k < pv.Z.size(); ++k) detail += (k ? ", " : "") + to_string(pv.Z[k]);
    rec.add("alpha=" + to_string(alpha), ok, detail + ")");
  }
  return rec.finish();
}

CriterionResult criterion_hecke_symmetry(const SuiteOptions& o) {
  Recorder rec(5, "color-position symmetry of the Hecke walk");
  ReplicaRng rng(derive_seed(o.seed, 5), 0);
  const double tol = 1e-10;
  for (int n : {2, 3}) {
    std::vector<GeneratorWord> words{GeneratorWord{}};
    for (int i = 0; i < 20; ++i) {
      GeneratorWord w;
      const int len = 1 + static_cast<int>(rng() % 6);
      for (int k = 0; k < len; ++k) w.letters.push_back(static_cast<int>(rng() % static_cast<std::uint64_t>(n)));
      words.push_back(w);
    }
    for (double alpha : {0.3, 0.7}) {
      for (double t : {0.5, 1.0, 2.0}) {
        double worst = 0.0;
        std::string worst_word;
        for (const auto& w : words) {
          const double tv = symmetry_check(n, alpha, t, w);
          if (tv >= worst) {
            worst = tv;
            worst_word = w.str();
          }
        }
        rec.add("n=" + std::to_string(n) + " alpha=" + fmt(alpha) + " t=" + fmt(t), worst <= tol,
                "max TV " + fmt(worst) + " over " + std::to_string(words.size()) + " words (worst " + worst_word + ")");
      }
    }
  }
  const auto w = reduced_word_reversal(1, 1);
  const double tv = symmetry_check(3, 0.7, 1.0, w);
  rec.add("reversal word " + w.str() + " at n=3", tv <= tol, "TV " + fmt(tv));
  return rec.finish();
}

namespace {

EnsembleSpec make_spec(InitialSpec init, double alpha, std::vector<double> times, std::uint64_t replicas,
                       std::uint64_t seed, std::vector<Observable> obs, const SuiteOptions& o) {
  EnsembleSpec s;
  s.initial = init;
  s.alpha = alpha;
  s.times = std::move(times);
  s.replicas = replicas;
  s.seed = seed;
  s.observables = std::move(obs);
  s.workers = o.workers;
  return s;
}

}  // namespace

CriterionResult criterion_finite_time_identities(const SuiteOptions& o) {
  Recorder rec(6, "finite-time identities between shock observables and step currents");
  const std::uint64_t n = o.scaled(o.identity_replicas);
  const std::vector<double> times{20.0, 40.0};

  {  // one shock, M1 = M2 = 2, alpha = 0.4
    const int M1 = 2, M2 = 2;
    const double alpha = 0.4;
    const auto eta = run_ensemble(make_spec(OneShockSpec{M1, M2, OneShockVariant::Eta}, alpha, times, n,
                                            derive_seed(o.seed, 61), {observables::second_class_exists()}, o));
    const auto eta_t = run_ensemble(make_spec(OneShockSpec{M1, M2, OneShockVariant::EtaTilde}, alpha, times, n,
                                              derive_seed(o.seed, 62),
                                              {observables::height(Color::First, 1), observables::height(Color::Second, 1)},
                                              o));
    const auto step = run_ensemble(make_spec(StepSpec{}, alpha, times, n, derive_seed(o.seed, 63),
                                             {identity_observable(IdentityFamily::OneShockExit, M1, M2),
                                              identity_observable(IdentityFamily::OneShockHeights, M1, M2, 0),
                                              identity_observable(IdentityFamily::OneShockHeights, M1, M2, 1)},
                                             o));
    for (std::size_t i = 0; i < times.size(); ++i) {
      const std::string at = " t=" + fmt(times[i]);
      rec.add("one shock: f present vs N(1)-N(6) <= 2" + at,
              compare_empirical(eta.distribution(i, 0), step.distribution(i, 0), o.policy));
      rec.add("one shock: N1(1) vs N(1)" + at,
              compare_empirical(eta_t.distribution(i, 0), step.distribution(i, 1), o.policy));
      rec.add("one shock: N2(1) vs min{5 - N(1) + N(6), 3}" + at,
              compare_empirical(eta_t.distribution(i, 1), step.distribution(i, 2), o.policy));
    }
  }
  {  // two shocks, N = M = 1, alpha = 0.4
    const int N = 1, M = 1;
    const double alpha = 0.4;
    const auto xi = run_ensemble(make_spec(TwoShockSpec{N, M, TwoShockVariant::Xi}, alpha, times, n,
                                           derive_seed(o.seed, 64), {observables::second_class_exists()}, o));
    const auto xi_t = run_ensemble(make_spec(TwoShockSpec{N, M, TwoShockVariant::XiTilde}, alpha, times, n,
                                             derive_seed(o.seed, 65),
                                             {observables::height(Color::First, 1), observables::height(Color::Second, 1),
                                              observables::height(Color::Third, 1)},
                                             o));
    const auto step = run_ensemble(make_spec(StepSpec{}, alpha, times, n, derive_seed(o.seed, 66),
                                             {identity_observable(IdentityFamily::TwoShockExit, N, M),
                                              identity_observable(IdentityFamily::TwoShockHeights, N, M, 0),
                                              identity_observable(IdentityFamily::TwoShockHeights, N, M, 1),
                                              identity_observable(IdentityFamily::TwoShockHeights, N, M, 2)},
                                             o));
    for (std::size_t i = 0; i < times.size(); ++i) {
      const std::string at = " t=" + fmt(times[i]);
      rec.add("two shocks: g present vs exit functional" + at,
              compare_empirical(xi.distribution(i, 0), step.distribution(i, 0), o.policy));
      for (std::size_t c = 0; c < 3; ++c) {
        rec.add("two shocks: N" + std::to_string(c + 1) + "(1) vs coordinate " + std::to_string(c + 1) + at,
                compare_empirical(xi_t.distribution(i, c), step.distribution(i, c + 1), o.policy));
      }
    }
  }
  return rec.finish();
}

namespace {

struct LawExperiment {
  std::string label;
  InitialSpec initial;
  Observable observable;
  LawTable law;
};

std::vector<LawExperiment> one_shock_experiments(const Rational& alpha) {
  return {
      {"one shock f present", OneShockSpec{1, 1, OneShockVariant::Eta}, observables::second_class_exists(),
       one_shock_exist_law(1, 1, alpha)},
      {"one shock N2(1)", OneShockSpec{1, 1, OneShockVariant::EtaTilde}, observables::height(Color::Second, 1),
       one_shock_height_law(1, 1, alpha)},
  };
}

std::vector<LawExperiment> two_shock_experiments(const Rational& alpha) {
  return {
      {"two shocks g present", TwoShockSpec{1, 1, TwoShockVariant::Xi}, observables::second_class_exists(),
       two_shock_exist_law(1, 1, alpha)},
      {"two shocks N3(1)", TwoShockSpec{1, 1, TwoShockVariant::XiTilde}, observables::height(Color::Third, 1),
       two_shock_height3_law(1, 1, alpha)},
  };
}

/// Each experiment runs independently at t = 100 and t = 200; both must match
/// the limit law and agree with each other.
void run_law_experiments(Recorder& rec, const std::vector<LawExperiment>& experiments, const Rational& alpha,
                         std::uint64_t seed_tag, const SuiteOptions& o) {
  const std::uint64_t n = o.scaled(o.law_replicas);
  const double a = to_double(alpha);
  const std::vector<double> times{100.0, 200.0};
  std::uint64_t tag = seed_tag;
  for (const auto& ex : experiments) {
    std::vector<EmpiricalDistribution> dists;
    for (double t : times) {
      const auto res =
          run_ensemble(make_spec(ex.initial, a, {t}, n, derive_seed(o.seed, tag++), {ex.observable}, o));
      dists.push_back(res.distribution(0, 0));
      auto report = compare_to_exact(dists.back(), ex.law.as_double(), o.policy);
      if (ex.law.assumes_mpa_limit) report.flags.push_back(kMpaLimitFlag);
      rec.add(ex.label + " vs limit law, alpha=" + fmt(a) + " t=" + fmt(t), report);
    }
    rec.add(ex.label + " plateau t=100 vs t=200", compare_empirical(dists[0], dists[1], o.policy));
    if (ex.law.assumes_mpa_limit && rec.result.flags.empty()) rec.result.flags.push_back(kMpaLimitFlag);
  }
}

}  // namespace

CriterionResult criterion_laws_low_density(const SuiteOptions& o) {
  Recorder rec(7, "limit laws for alpha <= 1/2");
  run_law_experiments(rec, one_shock_experiments(Rational(2, 5)), Rational(2, 5), 700, o);
  run_law_experiments(rec, two_shock_experiments(Rational(3, 10)), Rational(3, 10), 720, o);
  return rec.finish();
}

CriterionResult criterion_laws_max_current(const SuiteOptions& o) {
  Recorder rec(8, "limit laws for alpha = 3/4 against the matrix-product sums");
  const Rational alpha(3, 4);
  run_law_experiments(rec, one_shock_experiments(alpha), alpha, 800, o);
  run_law_experiments(rec, two_shock_experiments(alpha), alpha, 820, o);
  return rec.finish();
}

CriterionResult criterion_small_oracle(const SuiteOptions& o) {
  Recorder rec(9, "single second-class particle against the exact small-instance oracle");
  const double alpha = 0.4;
  const SiteConfiguration cfg0{Color::Second};
  {
    const double t = 0.5;
    const auto exact = exact_distribution_small(cfg0, alpha, t, 12);
    const auto law = exact.law([](const SiteConfiguration& c) { return observables::second_class_exists().evaluate(c); });
    std::map<std::int64_t, double> normalized = law;
    double mass = 0.0;
    for (const auto& [k, p] : law) mass += p;
    // Mass lost to truncation (at most truncation_bound) goes to the
    // "present" bin so that the law sums to one.
    normalized[1] += 1.0 - mass;
    const auto res = run_ensemble(make_spec(OneShockSpec{0, 0, OneShockVariant::Eta}, alpha, {t},
                                            o.scaled(o.oracle_replicas), derive_seed(o.seed, 91),
                                            {observables::second_class_exists()}, o));
    auto report = compare_to_exact(res.distribution(0, 0), normalized, o.policy);
    report.flags.push_back("oracle truncation bound " + fmt(exact.truncation_bound));
    rec.add("P(f exited) at t=0.5 (exact " + fmt(normalized[0]) + ")", report);
  }
  {
    const double t = 1e-3;
    const std::uint64_t n = o.scaled(o.oracle_replicas);
    const auto res = run_ensemble(make_spec(OneShockSpec{0, 0, OneShockVariant::Eta}, alpha, {t}, n,
                                            derive_seed(o.seed, 92), {observables::second_class_exists()}, o));
    const auto d = res.distribution(0, 0);
    const double p_hat = d.frequency(0);
    const double p0 = alpha * t;
    const double z = (p_hat - p0) / std::sqrt(p0 * (1.0 - p0) / static_cast<double>(n));
    rec.add("P(exit)/t at t=1e-3", std::abs(z) <= o.policy.sigma,
            "P(exit)/t=" + fmt(p_hat / t) + " alpha=" + fmt(alpha) + " z=" + fmt(z),
            {{"replicas", n}, {"exits", d.counts.count(0) ? d.counts.at(0) : 0}, {"z", z}});
  }
  return rec.finish();
}

CriterionResult criterion_kpz_consistency(const SuiteOptions& o) {
  Recorder rec(10, "KPZ-scale one-shock height law against step currents (KS)");
  const auto kp = kpz_parameters({1.0, 0.0, 1000.0});
  const int M = static_cast<int>(kp.block);
  const double t = 1000.0;
  const std::uint64_t n = o.scaled(o.kpz_replicas);
  const auto lhs = run_ensemble(make_spec(OneShockSpec{M, M, OneShockVariant::EtaTilde}, kp.alpha, {t}, n,
                                          derive_seed(o.seed, 101), {observables::height(Color::Second, 1)}, o));
  const auto rhs = run_ensemble(make_spec(StepSpec{}, kp.alpha, {t}, n, derive_seed(o.seed, 102),
                                          {identity_observable(IdentityFamily::OneShockHeights, M, M, 1)}, o));
  auto report = ks_two_sample(lhs.distribution(0, 0), rhs.distribution(0, 0), o.policy);
  rec.add("N2(1,t) vs min{2M+1 - N(1) + N(2M+2), M+1}, M=" + std::to_string(M) + " alpha=" + fmt(kp.alpha), report);
  return rec.finish();
}

CriterionResult check_exact_identities(const SuiteOptions&) {
  Recorder rec(0, "finite-time identities on the exact small-instance oracle");
  const double alpha = 0.4, t = 0.5;
  const ExactSmallOptions opts{1e-10, 4'000'000};

  const auto compare = [&](const std::string& name, const ExactDistribution& a, const ExactDistribution& b,
                           auto lhs, auto rhs) {
    const auto la = a.law(lhs);
    const auto lb = b.law(rhs);
    double worst = 0.0;
    for (const auto& [k, p] : la) worst = std::max(worst, std::abs(p - (lb.count(k) ? lb.at(k) : 0.0)));
    for (const auto& [k, p] : lb) {
      if (!la.count(k)) worst = std::max(worst, p);
    }
    const double allowed = a.truncation_bound + b.truncation_bound + 1e-12;
    rec.add(name, worst <= allowed, "max |dP| " + fmt(worst) + " allowed " + fmt(allowed));
  };

  {
    const int M1 = 1, M2 = 1;
    const auto step = exact_distribution_small(SiteConfiguration{}, alpha, t, 14, opts);
    const auto eta = exact_distribution_small(build_initial(OneShockSpec{M1, M2, OneShockVariant::Eta}), alpha, t, 16, opts);
    const auto eta_t =
        exact_distribution_small(build_initial(OneShockSpec{M1, M2, OneShockVariant::EtaTilde}), alpha, t, 16, opts);
    const auto exit_rhs = identity_observable(IdentityFamily::OneShockExit, M1, M2);
    compare("one shock exit law", eta, step, observables::second_class_exists().evaluate, exit_rhs.evaluate);
    const auto h0 = identity_observable(IdentityFamily::OneShockHeights, M1, M2, 0);
    const auto h1 = identity_observable(IdentityFamily::OneShockHeights, M1, M2, 1);
    compare(
        "one shock joint (N1(1), N2(1))", eta_t, step,
        [](const SiteConfiguration& c) {
          return height_count(c, Color::First, 1) * 64 + height_count(c, Color::Second, 1);
        },
        [&](const SiteConfiguration& c) { return h0.evaluate(c) * 64 + h1.evaluate(c); });
  }
  {
    const int N = 1, M = 1;
    const auto step = exact_distribution_small(SiteConfiguration{}, alpha, t, 14, opts);
    const auto xi = exact_distribution_small(build_initial(TwoShockSpec{N, M, TwoShockVariant::Xi}), alpha, t, 17, opts);
    const auto xi_t =
        exact_distribution_small(build_initial(TwoShockSpec{N, M, TwoShockVariant::XiTilde}), alpha, t, 17, opts);
    const auto exit_rhs = identity_observable(IdentityFamily::TwoShockExit, N, M);
    compare("two shock exit law", xi, step, observables::second_class_exists().evaluate, exit_rhs.evaluate);
    std::vector<Observable> h;
    for (int c = 0; c < 3; ++c) h.push_back(identity_observable(IdentityFamily::TwoShockHeights, N, M, c));
    compare(
        "two shock joint (N1(1), N2(1), N3(1))", xi_t, step,
        [](const SiteConfiguration& c) {
          return (height_count(c, Color::First, 1) * 64 + height_count(c, Color::Second, 1)) * 64 +
                 height_count(c, Color::Third, 1);
        },
        [&](const SiteConfiguration& c) {
          return (h[0].evaluate(c) * 64 + h[1].evaluate(c)) * 64 + h[2].evaluate(c);
        });
  }
  return rec.finish();
}

std::vector<CriterionFn> acceptance_criteria() {
  return {criterion_dehp_oracle,         criterion_stationary_structure, criterion_cluster_example,
          criterion_tree_example,        criterion_hecke_symmetry,       criterion_finite_time_identities,
          criterion_laws_low_density,    criterion_laws_max_current,     criterion_small_oracle,
          criterion_kpz_consistency};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"dehp-oracle", "hecke", "identities3x", "laws42", "kpz-internal"};
  return names;
}

std::vector<CriterionFn> suite(const std::string& name) {
  if (name == "dehp-oracle") {
    return {criterion_dehp_oracle, criterion_stationary_structure, criterion_cluster_example, criterion_tree_example};
  }
  if (name == "hecke") return {criterion_hecke_symmetry};
  if (name == "identities3x") return {check_exact_identities, criterion_finite_time_identities, criterion_small_oracle};
  if (name == "laws42") return {criterion_laws_low_density, criterion_laws_max_current};
  if (name == "kpz-internal") return {criterion_kpz_consistency};
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace hltasep
