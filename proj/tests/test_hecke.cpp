#include "doctest.h"

#include "hltasep/hecke.hpp"
#include "hltasep/rng.hpp"
#include "hltasep/stats.hpp"

using namespace hltasep;

TEST_CASE("signed permutations") {
  const auto id = SignedPermutation::identity(3);
  const auto s0 = id.left_generator(0);
  CHECK(s0(1) == -1);
  CHECK(s0(-1) == 1);
  CHECK(s0(2) == 2);
  const auto s1 = id.left_generator(1);
  CHECK(s1(1) == 2);
  CHECK((s0 * s1)(1) == s0(s1(1)));
  CHECK((s0 * s1).inverse() == s1 * s0);
  CHECK_THROWS_AS(SignedPermutation(std::vector<int>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(SignedPermutation(std::vector<int>{1, 3}), std::invalid_argument);
}

TEST_CASE("lengths from the Cayley graph") {
  CHECK(length(SignedPermutation::identity(3)) == 0);
  CHECK(length(SignedPermutation::identity(3).left_generator(0)) == 1);
  CHECK(length_cache(2).lengths().size() == 8);
  CHECK(length_cache(3).lengths().size() == 48);
  int longest = 0;
  for (const auto& pi : length_cache(3).elements()) {
    CHECK(length(pi) == length(pi.inverse()));
    longest = std::max(longest, length(pi));
  }
  CHECK(longest == 9);
}

TEST_CASE("Hecke action: nondecreasing and idempotent") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& pi : length_cache(n).elements()) {
      for (int k = 0; k < n; ++k) {
        const auto once = hecke_apply(pi, k);
        CHECK(length(once) >= length(pi));
        CHECK(hecke_apply(once, k) == once);
        const auto grown = pi.left_generator(k);
        CHECK(once == (length(grown) > length(pi) ? grown : pi));
      }
    }
  }
}

TEST_CASE("words and group products") {
  const GeneratorWord w{{0, 1}};
  CHECK(w.reversed() == GeneratorWord{{1, 0}});
  const auto id = SignedPermutation::identity(2);
  CHECK(group_product(w, 2) == id.left_generator(0).left_generator(1));
  CHECK(hecke_apply_word(id, w) == hecke_apply(hecke_apply(id, 0), 1));
  CHECK_THROWS_AS(validate_word(GeneratorWord{{2}}, 2), std::invalid_argument);
}

TEST_CASE("reduced words of the reversal") {
  CHECK(reduced_word_reversal(0, 0).letters.empty());
  CHECK(reduced_word_reversal(1, 0).letters.size() == 1);
  const auto w = reduced_word_reversal(1, 1);
  CHECK(w.letters.size() == 3);
  const auto pi = group_product(w, 3);
  CHECK(pi(1) == 3);
  CHECK(pi(2) == 2);
  CHECK(pi(3) == 1);
  CHECK(length(pi) == 3);
  CHECK(reduced_word_reversal(2, 2).letters.size() == 10);
}

TEST_CASE("walk distribution basics") {
  const auto at0 = ctmc_distribution(3, 0.4, 0.0, {}, {});
  CHECK(at0.at(SignedPermutation::identity(3)) == doctest::Approx(1.0));
  const auto s0 = ctmc_distribution(3, 0.4, 0.0, GeneratorWord{{0}}, {});
  CHECK(s0.at(SignedPermutation::identity(3).left_generator(0)) == doctest::Approx(1.0));
  const auto d = ctmc_distribution(3, 0.7, 1.5, {}, {});
  CHECK(d.total() == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(d.truncation_bound < 1e-12);
}

TEST_CASE("inverse pushforward") {
  DistributionTable point;
  point.weights[SignedPermutation::identity(3)] = 1.0;
  CHECK(total_variation(pushforward_inverse(point), point) == 0.0);

  const auto id = SignedPermutation::identity(3);
  DistributionTable prod;
  prod.weights[id.left_generator(1).left_generator(0)] = 1.0;
  DistributionTable swapped;
  swapped.weights[id.left_generator(0).left_generator(1)] = 1.0;
  CHECK(total_variation(pushforward_inverse(prod), swapped) == 0.0);

  const auto d = ctmc_distribution(3, 0.3, 1.0, GeneratorWord{{1, 0, 2}}, {});
  CHECK(total_variation(pushforward_inverse(pushforward_inverse(d)), d) == 0.0);
}

TEST_CASE("color-position symmetry holds for the walk") {
  for (int n : {2, 3}) {
    for (double a : {0.3, 0.7}) {
      CHECK(symmetry_check(n, a, 1.0, {}) <= 1e-10);
    }
  }
  CHECK(symmetry_check(3, 0.4, 2.0, reduced_word_reversal(1, 1)) <= 1e-10);
  CHECK(symmetry_check(3, 0.7, 0.5, GeneratorWord{{0, 2, 1, 0}}) <= 1e-10);
}

TEST_CASE("sampled walk matches uniformization") {
  const int n = 2;
  const double a = 0.7, t = 1.0;
  const auto exact = ctmc_distribution(n, a, t, {}, {});
  std::map<std::int64_t, double> law;
  for (const auto& [pi, w] : exact.weights) law[pi.key()] += w;
  EmpiricalDistribution emp;
  for (std::uint64_t r = 0; r < 2'000'000; ++r) {
    ReplicaRng rng(99, r);
    emp.add(sample_walk(n, a, t, rng).key());
  }
  const auto rep = compare_to_exact(emp, law);
  CHECK_MESSAGE(rep.pass, rep.to_json().dump());
}
