#include "hltasep/hecke.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "hltasep/poisson.hpp"

namespace hltasep {

SignedPermutation SignedPermutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  return SignedPermutation(std::move(img));
}

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = rank();
  if (n < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int v : images_) {
    const int a = std::abs(v);
    if (a < 1 || a > n || seen[static_cast<std::size_t>(a)]) {
      throw std::invalid_argument("not a signed permutation: " + str());
    }
    seen[static_cast<std::size_t>(a)] = true;
  }
}

int SignedPermutation::operator()(int i) const {
  const int a = std::abs(i);
  if (a < 1 || a > rank()) throw std::out_of_range("signed permutation argument out of range");
  const int v = images_[static_cast<std::size_t>(a - 1)];
  return i > 0 ? v : -v;
}

SignedPermutation SignedPermutation::left_generator(int k) const {
  if (k < 0 || k >= rank()) throw std::out_of_range("generator index out of range");
  std::vector<int> img = images_;
  for (int& v : img) {
    const int a = std::abs(v);
    const int s = v > 0 ? 1 : -1;
    if (k == 0) {
      if (a == 1) v = -v;
    } else if (a == k) {
      v = s * (k + 1);
    } else if (a == k + 1) {
      v = s * k;
    }
  }
  return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> img(images_.size());
  for (int i = 1; i <= rank(); ++i) {
    const int v = images_[static_cast<std::size_t>(i - 1)];
    img[static_cast<std::size_t>(std::abs(v) - 1)] = v > 0 ? i : -i;
  }
  return SignedPermutation(std::move(img));
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& rhs) const {
  if (rank() != rhs.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<int> img(images_.size());
  for (int i = 1; i <= rank(); ++i) img[static_cast<std::size_t>(i - 1)] = (*this)(rhs(i));
  return SignedPermutation(std::move(img));
}

std::uint32_t SignedPermutation::key() const {
  std::uint32_t k = static_cast<std::uint32_t>(rank());
  for (int v : images_) k = (k << 4) | static_cast<std::uint32_t>(v + 8);
  return k;
}

std::string SignedPermutation::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

GeneratorWord GeneratorWord::reversed() const { return {{letters.rbegin(), letters.rend()}}; }

std::string GeneratorWord::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(letters[i]);
  }
  return s + ")";
}

void validate_word(const GeneratorWord& w, int n) {
  for (int k : w.letters) {
    if (k < 0 || k >= n) throw std::invalid_argument("generator letter " + std::to_string(k) + " outside 0.." +
                                                     std::to_string(n - 1));
  }
}

LengthCache::LengthCache(int n) : n_(n) {
  if (n < 1 || n > kMaxLengthRank) throw std::invalid_argument("LengthCache: rank must be in 1..5");
  const auto id = SignedPermutation::identity(n);
  std::deque<SignedPermutation> queue{id};
  lengths_[id.key()] = 0;
  while (!queue.empty()) {
    const SignedPermutation pi = queue.front();
    queue.pop_front();
    elements_.push_back(pi);
    const int d = lengths_.at(pi.key());
    for (int k = 0; k < n; ++k) {
      auto next = pi.left_generator(k);
      if (lengths_.emplace(next.key(), d + 1).second) queue.push_back(std::move(next));
    }
  }
}

int LengthCache::length(const SignedPermutation& pi) const {
  if (pi.rank() != n_) throw std::invalid_argument("LengthCache: rank mismatch");
  return lengths_.at(pi.key());
}

std::vector<SignedPermutation> LengthCache::elements() const { return elements_; }

const LengthCache& length_cache(int n) {
  if (n < 1 || n > kMaxLengthRank) throw std::invalid_argument("length: rank must be in 1..5");
  static std::array<std::once_flag, kMaxLengthRank + 1> flags;
  static std::array<std::unique_ptr<LengthCache>, kMaxLengthRank + 1> caches;
  std::call_once(flags[static_cast<std::size_t>(n)],
                 [n] { caches[static_cast<std::size_t>(n)] = std::make_unique<LengthCache>(n); });
  return *caches[static_cast<std::size_t>(n)];
}

int length(const SignedPermutation& pi) { return length_cache(pi.rank()).length(pi); }

SignedPermutation hecke_apply(const SignedPermutation& pi, int k) {
  auto next = pi.left_generator(k);
  return length(next) > length(pi) ? next : pi;
}

SignedPermutation hecke_apply_word(SignedPermutation pi, const GeneratorWord& w) {
  validate_word(w, pi.rank());
  for (int k : w.letters) pi = hecke_apply(pi, k);
  return pi;
}

SignedPermutation group_product(const GeneratorWord& w, int n) {
  validate_word(w, n);
  auto pi = SignedPermutation::identity(n);
  for (int k : w.letters) pi = pi.left_generator(k);
  return pi;
}

double DistributionTable::total() const {
  double s = 0.0;
  for (const auto& [pi, p] : weights) s += p;
  return s;
}

double DistributionTable::at(const SignedPermutation& pi) const {
  const auto it = weights.find(pi);
  return it == weights.end() ? 0.0 : it->second;
}

DistributionTable pushforward_inverse(const DistributionTable& table) {
  DistributionTable out;
  out.truncation_bound = table.truncation_bound;
  for (const auto& [pi, p] : table.weights) out.weights[pi.inverse()] += p;
  return out;
}

double total_variation(const DistributionTable& a, const DistributionTable& b) {
  double s = 0.0;
  for (const auto& [pi, p] : a.weights) s += std::abs(p - b.at(pi));
  for (const auto& [pi, p] : b.weights) {
    if (!a.weights.count(pi)) s += std::abs(p);
  }
  return 0.5 * s;
}

DistributionTable ctmc_distribution(int n, double alpha, double t, const GeneratorWord& pre_word,
                                    const GeneratorWord& post_word) {
  if (n < 1 || n > kMaxCtmcRank) throw std::invalid_argument("ctmc_distribution: rank must be in 1..4");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0,1)");
  if (!std::isfinite(t) || t < 0.0) throw std::invalid_argument("t must be finite and >= 0");
  validate_word(pre_word, n);
  validate_word(post_word, n);

  const auto& cache = length_cache(n);
  const auto elements = cache.elements();
  std::map<std::uint32_t, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i].key()] = i;

  // Uniformized chain: from each state, generator k is chosen with
  // probability rate_k / Lambda.
  const double lambda = alpha + (n - 1);
  std::vector<std::vector<std::pair<std::size_t, double>>> step(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (int k = 0; k < n; ++k) {
      const double rate = k == 0 ? alpha : 1.0;
      step[i].emplace_back(index.at(hecke_apply(elements[i], k).key()), rate / lambda);
    }
  }

  std::vector<double> v(elements.size(), 0.0);
  v[index.at(hecke_apply_word(SignedPermutation::identity(n), pre_word).key())] = 1.0;
  const auto pw = poisson_weights(lambda * t, 1e-12);
  std::vector<double> acc(elements.size(), 0.0);
  for (std::size_t j = 0; j < pw.weights.size(); ++j) {
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += pw.weights[j] * v[i];
    if (j + 1 == pw.weights.size()) break;
    std::vector<double> next(elements.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0.0) continue;
      for (const auto& [to, p] : step[i]) next[to] += v[i] * p;
    }
    v = std::move(next);
  }

  DistributionTable out;
  out.truncation_bound = pw.tail;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (acc[i] == 0.0) continue;
    out.weights[hecke_apply_word(elements[i], post_word)] += acc[i];
  }
  return out;
}

double symmetry_check(int n, double alpha, double t, const GeneratorWord& word) {
  const auto first = ctmc_distribution(n, alpha, t, word, {});
  const auto second = pushforward_inverse(ctmc_distribution(n, alpha, t, {}, word.reversed()));
  return total_variation(first, second);
}

GeneratorWord reduced_word_reversal(int M1, int M2) {
  if (M1 < 0 || M2 < 0) throw std::invalid_argument("block lengths must be >= 0");
  const int w = M1 + M2 + 1;
  GeneratorWord word;
  for (int pass = 1; pass < w; ++pass) {
    for (int k = 1; k <= w - pass; ++k) word.letters.push_back(k);
  }
  std::vector<int> target(static_cast<std::size_t>(w));
  for (int i = 1; i <= w; ++i) target[static_cast<std::size_t>(i - 1)] = w + 1 - i;
  if (group_product(word, w) != SignedPermutation(target)) {
    throw std::logic_error("reduced_word_reversal: sorting network does not produce the reversal");
  }
  if (w <= kMaxLengthRank && static_cast<int>(word.letters.size()) != length(SignedPermutation(target))) {
    throw std::logic_error("reduced_word_reversal: word is not minimal");
  }
  return word;
}

}  // namespace hltasep
