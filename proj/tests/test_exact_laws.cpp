#include "doctest.h"

#include "hltasep/dehp.hpp"
#include "hltasep/enumerate.hpp"
#include "hltasep/exact_laws.hpp"

using namespace hltasep;

namespace {

using Prob = std::function<Rational(const BinaryWord&)>;

Prob bernoulli_words(const Rational& a) {
  return [a](const BinaryWord& eta) { return bernoulli_prob(eta, a); };
}
Prob rewritten_words(const Rational& a) {
  return [a](const BinaryWord& eta) { return rewrite_oracle(eta, a); };
}
Prob tree_words(const Rational& a) {
  return [a](const BinaryWord& eta) { return mpa_prob(eta, a); };
}

int ones(const BinaryWord& eta, int from, int to) {
  int s = 0;
  for (int i = from; i < to; ++i) s += eta[i];
  return s;
}

// Word-level sums over {0,1}^L, independent of the closed forms.
Rational one_shock_exist_words(int M1, int M2, const Prob& p) {
  const int L = M1 + M2 + 1;
  return sum_over_words_serial<Rational>(L, [&](const BinaryWord& e) { return e.ones() <= M1; }, p);
}

Rational one_shock_height_words(int m, int M1, int M2, const Prob& p) {
  const int L = M1 + M2 + 1;
  return sum_over_words_serial<Rational>(L, [&](const BinaryWord& e) { return e.ones() == L - m; }, p);
}

bool two_shock_exist_cell(int N, int M, int m, int n) {
  return (m <= N - 1 && n <= M + N - m) || (m >= N && n <= M);
}

Rational two_shock_exist_words(int N, int M, const Prob& p) {
  const int K = M + N;
  return sum_over_words_serial<Rational>(
      2 * K + 1, [&](const BinaryWord& e) { return two_shock_exist_cell(N, M, ones(e, 0, K), ones(e, K, 2 * K + 1)); },
      p);
}

Rational two_shock_height3_words(int s, int N, int M, const Prob& p) {
  const int K = M + N;
  return sum_over_words_serial<Rational>(
      2 * K + 1,
      [&](const BinaryWord& e) {
        const int m = ones(e, 0, K), n = ones(e, K, 2 * K + 1);
        if (m >= N) return n == K + 1 - s;
        const int j = N - m;
        return j >= 1 && j <= s && n == K + 1 - s + j;
      },
      p);
}

}  // namespace

TEST_CASE("one-shock closed forms, low density") {
  CHECK(p_exist_one_shock(0, 0, Rational(2, 5)).value == Rational(3, 5));
  CHECK(p_exist_one_shock(1, 1, Rational(2, 5)).value == Rational(81, 125));
  CHECK(to_double(p_exist_one_shock(1, 1, Rational(2, 5)).value) == doctest::Approx(0.648));
  CHECK(p_height_one_shock(1, 1, 1, Rational(2, 5)).value == Rational(36, 125));
  CHECK(to_double(p_height_one_shock(1, 1, 1, Rational(2, 5)).value) == doctest::Approx(0.288));
  for (int M1 = 0; M1 <= 3; ++M1) {
    for (int M2 = 0; M2 <= 3; ++M2) {
      Rational expect = 1;
      for (int i = 0; i < M1 + M2 + 1; ++i) expect *= Rational(3, 10);
      CHECK(p_height_one_shock(0, M1, M2, Rational(3, 10)).value == expect);
    }
  }
  const auto v = p_exist_one_shock(1, 1, Rational(2, 5));
  CHECK(v.regime == Regime::Bernoulli);
  CHECK_FALSE(v.assumes_mpa_limit);
}

TEST_CASE("closed forms match word sums in the Bernoulli regime") {
  for (const Rational& a : {Rational(1, 5), Rational(3, 10), Rational(2, 5), Rational(1, 2)}) {
    for (int M1 = 0; M1 <= 4; ++M1) {
      for (int M2 = 0; M2 + M1 + 1 <= 9; ++M2) {
        CHECK(p_exist_one_shock(M1, M2, a).value == one_shock_exist_words(M1, M2, bernoulli_words(a)));
        for (int m = 0; m <= M2; ++m) {
          CHECK(p_height_one_shock(m, M1, M2, a).value == one_shock_height_words(m, M1, M2, bernoulli_words(a)));
        }
      }
    }
    for (int N = 0; N <= 2; ++N) {
      for (int M = 0; 2 * (N + M) + 1 <= 9; ++M) {
        CHECK(p_exist_two_shock(N, M, a).value == two_shock_exist_words(N, M, bernoulli_words(a)));
        for (int s = 0; s <= N; ++s) {
          CHECK(p_height3_two_shock(s, N, M, a).value == two_shock_height3_words(s, N, M, bernoulli_words(a)));
        }
      }
    }
  }
}

TEST_CASE("max-current branch equals rewrite sums over the same word sets") {
  for (const Rational& a : {Rational(3, 5), Rational(3, 4)}) {
    for (int M1 = 0; M1 <= 3; ++M1) {
      for (int M2 = 0; M1 + M2 + 1 <= 7; ++M2) {
        const auto v = p_exist_one_shock(M1, M2, a);
        CHECK(v.regime == Regime::Mpa);
        CHECK(v.assumes_mpa_limit);
        CHECK(v.value == one_shock_exist_words(M1, M2, rewritten_words(a)));
        for (int m = 0; m <= M2; ++m) {
          CHECK(p_height_one_shock(m, M1, M2, a).value == one_shock_height_words(m, M1, M2, rewritten_words(a)));
        }
      }
    }
    for (int N = 0; N <= 1; ++N) {
      for (int M = 0; 2 * (N + M) + 1 <= 7; ++M) {
        CHECK(p_exist_two_shock(N, M, a).value == two_shock_exist_words(N, M, rewritten_words(a)));
        for (int s = 0; s <= N; ++s) {
          CHECK(p_height3_two_shock(s, N, M, a).value == two_shock_height3_words(s, N, M, rewritten_words(a)));
        }
      }
    }
  }
  CHECK(p_exist_one_shock(1, 0, Rational(3, 4)).value ==
        mpa_prob(BinaryWord::parse("00"), Rational(3, 4)) + mpa_prob(BinaryWord::parse("10"), Rational(3, 4)) +
            mpa_prob(BinaryWord::parse("01"), Rational(3, 4)));
}

TEST_CASE("laws are continuous at one half") {
  const Rational h(1, 2);
  for (int M1 = 0; M1 <= 4; ++M1) {
    for (int M2 = 0; M1 + M2 + 1 <= 10; ++M2) {
      CHECK(p_exist_one_shock(M1, M2, h).value == one_shock_exist_words(M1, M2, tree_words(h)));
      for (int m = 0; m <= M2; ++m) {
        CHECK(p_height_one_shock(m, M1, M2, h).value == one_shock_height_words(m, M1, M2, tree_words(h)));
      }
    }
  }
  for (int N = 0; N <= 2; ++N) {
    for (int M = 0; 2 * (N + M) + 1 <= 9; ++M) {
      CHECK(p_exist_two_shock(N, M, h).value == two_shock_exist_words(N, M, tree_words(h)));
      for (int s = 0; s <= N; ++s) {
        CHECK(p_height3_two_shock(s, N, M, h).value == two_shock_height3_words(s, N, M, tree_words(h)));
      }
    }
  }
}

TEST_CASE("law tables are complete probability vectors") {
  for (const Rational& a : {Rational(2, 5), Rational(1, 2), Rational(3, 4)}) {
    for (int M1 = 0; M1 <= 3; ++M1) {
      for (int M2 = 0; M1 + M2 + 1 <= 10; ++M2) {
        for (const auto& law : {one_shock_height_law(M1, M2, a), one_shock_exist_law(M1, M2, a)}) {
          Rational total = 0;
          for (const auto& [k, p] : law.probabilities) {
            CHECK(p >= 0);
            CHECK(p <= 1);
            total += p;
          }
          CHECK(total == 1);
        }
        CHECK(one_shock_height_law(M1, M2, a).probabilities.size() == static_cast<std::size_t>(M2 + 2));
      }
    }
    for (const auto& law : {two_shock_exist_law(1, 1, a), two_shock_height3_law(1, 1, a)}) {
      Rational total = 0;
      for (const auto& [k, p] : law.probabilities) {
        CHECK(p >= 0);
        total += p;
      }
      CHECK(total == 1);
    }
  }
}

TEST_CASE("empty index ranges and argument checks") {
  const Rational a(3, 10);
  const Rational only_m = p_height3_two_shock(0, 1, 1, a).value;
  CHECK(only_m == two_shock_height3_words(0, 1, 1, bernoulli_words(a)));
  CHECK(p_height3_two_shock(1, 1, 0, a).value == two_shock_height3_words(1, 1, 0, bernoulli_words(a)));
  CHECK_THROWS_AS(p_height_one_shock(3, 1, 2, a), std::invalid_argument);
  CHECK_THROWS_AS(p_height3_two_shock(2, 1, 1, a), std::invalid_argument);
  CHECK_THROWS_AS(p_exist_one_shock(-1, 0, a), std::invalid_argument);
  CHECK_THROWS_AS(p_exist_one_shock(9, 9, Rational(3, 4)), std::invalid_argument);
  CHECK_THROWS_AS(p_exist_one_shock(1, 1, Rational(6, 5)), std::invalid_argument);
}

TEST_CASE("query dispatch and names") {
  const auto v = evaluate(LawQuery{LawFamily::OneShockHeight, 1, 1, 1, Rational(2, 5)});
  CHECK(v.value == Rational(36, 125));
  for (auto f : {LawFamily::OneShockExist, LawFamily::OneShockHeight, LawFamily::TwoShockExist,
                 LawFamily::TwoShockHeight3}) {
    CHECK(parse_law_family(to_string(f)) == f);
  }
  CHECK_THROWS_AS(parse_law_family("nope"), std::invalid_argument);
}
