#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hltasep/dehp.hpp"

namespace hltasep {

inline constexpr int kEnumerationCap = 18;

/// Sum of f(eta) over all eta in {0,1}^L for which keep(eta) holds.
template <class Scalar, class Keep, class F>
Scalar sum_over_words_serial(int L, Keep&& keep, F&& f) {
  if (L < 1 || L > kEnumerationCap) throw std::invalid_argument("word enumeration limited to 1..18 sites");
  Scalar sum(0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << L); ++mask) {
    const BinaryWord eta = BinaryWord::from_mask(mask, L);
    if (keep(eta)) sum += f(eta);
  }
  return sum;
}

/// Same sum split by prefix across OpenMP threads; partial sums are combined
/// in prefix order so the result does not depend on the schedule.
template <class Scalar, class Keep, class F>
Scalar sum_over_words(int L, Keep&& keep, F&& f) {
  if (L < 1 || L > kEnumerationCap) throw std::invalid_argument("word enumeration limited to 1..18 sites");
  const int prefix_bits = L < 6 ? L : 6;
  const std::int64_t chunks = std::int64_t{1} << prefix_bits;
  const int rest = L - prefix_bits;
  std::vector<Scalar> partial(static_cast<std::size_t>(chunks), Scalar(0));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t p = 0; p < chunks; ++p) {
    Scalar local(0);
    for (std::uint64_t low = 0; low < (std::uint64_t{1} << rest); ++low) {
      const std::uint64_t mask = static_cast<std::uint64_t>(p) | (low << prefix_bits);
      const BinaryWord eta = BinaryWord::from_mask(mask, L);
      if (keep(eta)) local += f(eta);
    }
    partial[static_cast<std::size_t>(p)] = local;
  }
  Scalar sum(0);
  for (const auto& s : partial) sum += s;
  return sum;
}

}  // namespace hltasep
