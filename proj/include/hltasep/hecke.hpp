#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace hltasep {

inline constexpr int kMaxLengthRank = 5;
inline constexpr int kMaxCtmcRank = 4;

/// Element of the hyperoctahedral group B_n in one-line notation:
/// images[i-1] = pi(i), with pi(-i) = -pi(i) implied.
class SignedPermutation {
 public:
  static SignedPermutation identity(int n);
  explicit SignedPermutation(std::vector<int> images);

  int rank() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const;  // i in +-1..+-n
  const std::vector<int>& images() const { return images_; }

  /// s_k * this: s_0 negates the values +-1, s_k swaps the values k and k+1.
  SignedPermutation left_generator(int k) const;
  SignedPermutation inverse() const;
  SignedPermutation operator*(const SignedPermutation& rhs) const;  // (a*b)(i) = a(b(i))

  std::uint32_t key() const;
  std::string str() const;

  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

 private:
  std::vector<int> images_;
};

/// Letters k in 0..n-1; the word (k_1, ..., k_m) stands for s_{k_m} ... s_{k_1},
/// so k_1 acts first.
struct GeneratorWord {
  std::vector<int> letters;

  GeneratorWord reversed() const;
  std::string str() const;
  friend bool operator==(const GeneratorWord&, const GeneratorWord&) = default;
};

void validate_word(const GeneratorWord& w, int n);

/// Cayley-graph distances from the identity for every element of B_n.
class LengthCache {
 public:
  explicit LengthCache(int n);
  int rank() const { return n_; }
  int length(const SignedPermutation& pi) const;
  const std::map<std::uint32_t, int>& lengths() const { return lengths_; }
  std::vector<SignedPermutation> elements() const;

 private:
  int n_;
  std::map<std::uint32_t, int> lengths_;
  std::vector<SignedPermutation> elements_;
};

/// Shared immutable cache for rank n (n <= 5).
const LengthCache& length_cache(int n);

int length(const SignedPermutation& pi);

/// Hecke action of T_{s_k} on the basis vector T_pi.
SignedPermutation hecke_apply(const SignedPermutation& pi, int k);
/// Hecke product applied to pi: k_1 first.
SignedPermutation hecke_apply_word(SignedPermutation pi, const GeneratorWord& w);
/// Group product s_{k_m} ... s_{k_1}.
SignedPermutation group_product(const GeneratorWord& w, int n);

struct DistributionTable {
  std::map<SignedPermutation, double> weights;
  double truncation_bound = 0.0;

  double total() const;
  double at(const SignedPermutation& pi) const;
};

DistributionTable pushforward_inverse(const DistributionTable& table);
double total_variation(const DistributionTable& a, const DistributionTable& b);

/// Law of: pre_word applied to the identity by the Hecke action, then the
/// walk W(t) (s_0 at rate alpha, s_k at rate 1), then post_word.
/// Computed by uniformization with Poisson tail below 1e-12.
DistributionTable ctmc_distribution(int n, double alpha, double t, const GeneratorWord& pre_word,
                                    const GeneratorWord& post_word);

/// TV distance between ctmc(pre = word) and the inverse pushforward of
/// ctmc(post = reverse(word)).
double symmetry_check(int n, double alpha, double t, const GeneratorWord& word);

/// Bubble-sort word for pi(i) = M1+M2+2-i on 1..M1+M2+1, letters k >= 1.
/// Verified against the BFS length when the rank is at most 5.
GeneratorWord reduced_word_reversal(int M1, int M2);

/// One sample of the walk at time t started from the identity.
template <class Rng>
SignedPermutation sample_walk(int n, double alpha, double t, Rng& rng) {
  SignedPermutation pi = SignedPermutation::identity(n);
  const double total = alpha + (n - 1);
  double now = 0.0;
  for (;;) {
    now += rng.exponential(total);
    if (now > t) return pi;
    const double u = rng.uniform01() * total;
    int k = u < alpha ? 0 : static_cast<int>(u - alpha) + 1;
    if (k > n - 1) k = n - 1;
    pi = hecke_apply(pi, k);
  }
}

}  // namespace hltasep
