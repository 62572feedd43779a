#include "doctest.h"

#include "hltasep/dehp.hpp"
#include "hltasep/enumerate.hpp"

using namespace hltasep;

namespace {

const Rational kC{1, 4};
const auto kAll = [](const BinaryWord&) { return true; };

std::vector<Rational> alphas() {
  return {Rational(1, 5), Rational(2, 5), Rational(1, 2), Rational(3, 5), Rational(3, 4), Rational(9, 10)};
}

}  // namespace

TEST_CASE("binary words") {
  CHECK(BinaryWord::parse("100") == BinaryWord::parse("1,0,0"));
  CHECK(BinaryWord::from_mask(0b001, 3) == BinaryWord::parse("100"));
  CHECK(BinaryWord::parse("0110").ones() == 2);
  CHECK(BinaryWord::parse("01").appended(1).str() == "011");
  CHECK_THROWS_AS(BinaryWord(std::vector<std::uint8_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(BinaryWord::parse("012"), std::invalid_argument);
}

TEST_CASE("cluster statistics") {
  const auto st = cluster_stats(BinaryWord::parse("001001101100"));
  CHECK(st.ell == 5);
  CHECK(st.A == 3);
  CHECK(st.sigma == std::vector<int>{1, 2, 2});
  CHECK(st.tau == std::vector<int>{2, 2, 1, 2});
  CHECK(st.Psi == std::vector<int>{5, 4, 2, 0});
  CHECK(st.Phi == std::vector<int>{7, 5, 3, 2, 0});

  const auto zeros = cluster_stats(BinaryWord::parse("0000"));
  CHECK(zeros.ell == 0);
  CHECK(zeros.A == 0);
  CHECK(zeros.Psi == std::vector<int>{0});
  CHECK(zeros.Phi == std::vector<int>{4, 0});

  const auto ones = cluster_stats(BinaryWord::parse("111"));
  CHECK(ones.A == 1);
  CHECK(ones.sigma == std::vector<int>{3});
  CHECK(ones.tau == std::vector<int>{0, 0});
  CHECK(ones.Psi == std::vector<int>{3, 0});
  CHECK(ones.Phi == std::vector<int>{0, 0, 0});
}

TEST_CASE("cluster statistics invariants") {
  for (int L = 1; L <= 10; ++L) {
    for (std::uint64_t m = 0; m < (1u << L); ++m) {
      const auto eta = BinaryWord::from_mask(m, L);
      const auto st = cluster_stats(eta);
      int s = 0, t = 0;
      for (int v : st.sigma) s += v;
      for (int v : st.tau) t += v;
      CHECK(s == st.ell);
      CHECK(t == L - st.ell);
      CHECK(st.psi(st.A + 1) == 0);
      CHECK(st.phi(st.A + 1) == 0);
      CHECK(st.psi(1) == st.ell);
      CHECK(st.phi(0) == L - st.ell);
    }
  }
}

TEST_CASE("boundary moments") {
  CHECK(wv_moment(0, Rational(3, 5)) == 1);
  for (const Rational& a : {Rational(3, 5), Rational(3, 4), Rational(9, 10)}) {
    CHECK(wv_moment(1, a) == 1 - kC / a);
    for (int k = 0; k < 8; ++k) CHECK(wv_moment(k + 2, a) == wv_moment(k + 1, a) - kC * wv_moment(k, a));
  }
  CHECK(wv_moment(2, Rational(3, 4)) == Rational(5, 12));
}

TEST_CASE("three-site tree") {
  for (const Rational& a : {Rational(3, 5), Rational(3, 4)}) {
    const auto pv = dehp_partition(BinaryWord::parse("100"), a);
    REQUIRE(pv.Z.size() == 2);
    CHECK(pv.Z[1] == kC * kC);
    CHECK(pv.Z[0] == kC * kC * (kC / a) + kC * (kC / a) * (kC / a));
    CHECK(rewrite_oracle(BinaryWord::parse("100"), a) ==
          kC * kC * wv_moment(1, a) + kC * kC * (kC / a) + kC * (kC / a) * (kC / a));
  }
}

TEST_CASE("node classification") {
  const auto st = cluster_stats(BinaryWord::parse("100"));
  CHECK(dehp_node_kind(st, 1, 2) == NodeKind::TwoChildren);
  CHECK(dehp_node_kind(st, 0, 2) == NodeKind::OneChild);
  CHECK(dehp_node_kind(st, 1, 1) == NodeKind::TwoChildren);
  CHECK(dehp_node_kind(st, 0, 1) == NodeKind::OneChild);
  CHECK(dehp_node_kind(st, 2, 2) == NodeKind::Unclassified);
}

TEST_CASE("Bernoulli regime and continuity at one half") {
  CHECK(stationary_prob(BinaryWord::parse("10"), Rational(2, 5)).value == Rational(6, 25));
  CHECK(stationary_prob(BinaryWord::parse("10"), Rational(2, 5)).regime == Regime::Bernoulli);
  for (int L = 1; L <= 10; ++L) {
    for (std::uint64_t m = 0; m < (1u << L); ++m) {
      const auto eta = BinaryWord::from_mask(m, L);
      CHECK(mpa_prob(eta, Rational(1, 2)) == Rational(1, std::int64_t{1} << L));
    }
  }
}

TEST_CASE("tree DP equals word rewriting, layered DP and stays nonnegative") {
  for (const Rational& a : {Rational(3, 5), Rational(3, 4), Rational(9, 10)}) {
    for (int L = 1; L <= 8; ++L) {
      for (std::uint64_t m = 0; m < (1u << L); ++m) {
        const auto eta = BinaryWord::from_mask(m, L);
        const auto p = stationary_prob(eta, a);
        CHECK(p.regime == Regime::Mpa);
        CHECK(p.assumes_mpa_limit);
        CHECK(p.value == rewrite_oracle(eta, a));
        CHECK(p.value >= 0);
        CHECK(p.value <= 1);
        const auto direct = dehp_partition(eta, a);
        const auto layered = dehp_partition_layered(eta, a);
        CHECK(direct.Z == layered.Z);
        for (const auto& z : direct.Z) CHECK(z >= 0);
      }
    }
  }
}

TEST_CASE("normalization and Kolmogorov consistency") {
  for (const Rational& a : alphas()) {
    for (int L = 1; L <= 8; ++L) {
      const Rational total =
          sum_over_words<Rational>(L, kAll, [&](const BinaryWord& eta) { return stationary_prob(eta, a).value; });
      CHECK(total == 1);
      for (std::uint64_t m = 0; m < (1u << L); ++m) {
        const auto eta = BinaryWord::from_mask(m, L);
        CHECK(stationary_prob(eta.appended(0), a).value + stationary_prob(eta.appended(1), a).value ==
              stationary_prob(eta, a).value);
      }
    }
  }
}

TEST_CASE("high precision evaluation agrees with exact rationals") {
  const HighPrecision a = HighPrecision(3) / 4;
  for (std::uint64_t m = 0; m < 64; ++m) {
    const auto eta = BinaryWord::from_mask(m, 6);
    const HighPrecision hp = mpa_prob(eta, a);
    const HighPrecision ex = to_high_precision(mpa_prob(eta, Rational(3, 4)));
    CHECK(boost::multiprecision::abs(hp - ex) <= HighPrecision("1e-30") * ex);
  }
  const HighPrecision irrational = boost::multiprecision::sqrt(HighPrecision(2)) / 2;
  const HighPrecision total = sum_over_words<HighPrecision>(
      6, kAll, [&](const BinaryWord& eta) { return stationary_prob(eta, irrational).value; });
  CHECK(boost::multiprecision::abs(total - 1) <= HighPrecision("1e-30"));
}

TEST_CASE("alpha outside the unit interval is rejected") {
  CHECK_THROWS_AS(stationary_prob(BinaryWord::parse("1"), Rational(6, 5)), std::invalid_argument);
  CHECK_THROWS_AS(stationary_prob(BinaryWord::parse("1"), Rational(0)), std::invalid_argument);
}
