#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hltasep/rational.hpp"

namespace hltasep {

/// eta in {0,1}^L with L >= 1; bit i is site i+1.
class BinaryWord {
 public:
  explicit BinaryWord(std::vector<std::uint8_t> bits);
  /// "100" or "1,0,0" style text.
  static BinaryWord parse(const std::string& text);
  /// Low L bits of mask, site 1 in bit 0.
  static BinaryWord from_mask(std::uint64_t mask, int length);

  int length() const { return static_cast<int>(bits_.size()); }
  int operator[](int i) const { return bits_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  int ones() const;
  BinaryWord appended(int bit) const;
  std::string str() const;
  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Cluster decomposition of eta: tau_0 zeros, sigma_1 ones, tau_1 zeros, ...,
/// sigma_A ones, tau_A zeros.
struct ClusterStats {
  int ell = 0;             // number of ones
  int A = 0;               // number of clusters of ones
  std::vector<int> sigma;  // sigma_1..sigma_A
  std::vector<int> tau;    // tau_0..tau_A
  std::vector<int> Psi;    // Psi_1..Psi_{A+1}, Psi[i-1] = sum_{j>=i} sigma_j
  std::vector<int> Phi;    // Phi_0..Phi_{A+1}, Phi[j] = sum_{k>=j} tau_k

  int psi(int i) const { return Psi.at(static_cast<std::size_t>(i - 1)); }
  int phi(int j) const { return Phi.at(static_cast<std::size_t>(j)); }
};

ClusterStats cluster_stats(const BinaryWord& eta);

template <class Scalar>
Scalar dehp_c() {
  return Scalar(1) / Scalar(4);
}

template <class Scalar>
void validate_alpha(const Scalar& alpha) {
  if (!(alpha > Scalar(0) && alpha < Scalar(1))) throw std::invalid_argument("alpha must lie in (0,1)");
}

/// Endpoint partition functions Z_0..Z_{Psi_1} of the weighted tree.
template <class Scalar>
struct PartitionVector {
  std::vector<Scalar> Z;
  Scalar alpha;
  Scalar c;
};

enum class NodeKind { OneChild, TwoChildren, Unclassified };

/// Membership of node (x, y), y >= 1, in the one-child / two-children sets.
NodeKind dehp_node_kind(const ClusterStats& st, int x, int y);

/// Dynamic programming over nodes (x, y) in decreasing y, using the node-set
/// membership rule directly. One-child nodes pass weight c/alpha to (x, y-1);
/// two-children nodes pass c to (x, y-1) and to (x-1, y).
template <class Scalar>
PartitionVector<Scalar> dehp_partition(const BinaryWord& eta, const Scalar& alpha) {
  validate_alpha(alpha);
  const ClusterStats st = cluster_stats(eta);
  const int X = st.psi(1);
  const int Y = st.phi(0);
  const Scalar c = dehp_c<Scalar>();
  const Scalar c_alpha = c / alpha;

  const auto idx = [X](int x, int y) { return static_cast<std::size_t>(y) * (X + 1) + x; };
  std::vector<Scalar> w(static_cast<std::size_t>((X + 1) * (Y + 1)), Scalar(0));
  std::vector<std::uint8_t> reached(w.size(), 0);
  w[idx(X, Y)] = Scalar(1);
  reached[idx(X, Y)] = 1;

  for (int y = Y; y >= 1; --y) {
    for (int x = X; x >= 0; --x) {
      if (!reached[idx(x, y)]) continue;
      const Scalar& here = w[idx(x, y)];
      switch (dehp_node_kind(st, x, y)) {
        case NodeKind::OneChild:
          w[idx(x, y - 1)] += here * c_alpha;
          reached[idx(x, y - 1)] = 1;
          break;
        case NodeKind::TwoChildren:
          w[idx(x, y - 1)] += here * c;
          reached[idx(x, y - 1)] = 1;
          w[idx(x - 1, y)] += here * c;
          reached[idx(x - 1, y)] = 1;
          break;
        case NodeKind::Unclassified:
          throw std::logic_error("dehp_partition: reachable node (" + std::to_string(x) + "," + std::to_string(y) +
                                 ") has no child rule");
      }
    }
  }
  PartitionVector<Scalar> out{std::vector<Scalar>(static_cast<std::size_t>(X + 1)), alpha, c};
  for (int k = 0; k <= X; ++k) out.Z[static_cast<std::size_t>(k)] = w[idx(k, 0)];
  return out;
}

/// Same vector built block by block from the left: the coefficients of
/// <w|D^k are shifted by each cluster of ones and then pushed through a
/// one-layer tree for the following cluster of zeros.
template <class Scalar>
PartitionVector<Scalar> dehp_partition_layered(const BinaryWord& eta, const Scalar& alpha) {
  validate_alpha(alpha);
  const ClusterStats st = cluster_stats(eta);
  const Scalar c = dehp_c<Scalar>();
  const Scalar c_alpha = c / alpha;

  std::vector<Scalar> coeff{Scalar(1)};
  for (int block = 0; block <= st.A; ++block) {
    const int shift = block == 0 ? 0 : st.sigma[static_cast<std::size_t>(block - 1)];
    std::vector<Scalar> layer(coeff.size() + static_cast<std::size_t>(shift), Scalar(0));
    for (std::size_t k = 0; k < coeff.size(); ++k) layer[k + static_cast<std::size_t>(shift)] = coeff[k];
    for (int y = st.tau[static_cast<std::size_t>(block)]; y >= 1; --y) {
      std::vector<Scalar> below(layer.size(), Scalar(0));
      for (std::size_t x = layer.size(); x-- > 0;) {
        if (layer[x] == Scalar(0)) continue;
        if (x == 0) {
          below[0] += layer[0] * c_alpha;
        } else {
          below[x] += layer[x] * c;
          layer[x - 1] += layer[x] * c;
        }
      }
      layer = std::move(below);
    }
    coeff = std::move(layer);
  }
  return {std::move(coeff), alpha, c};
}

/// <w|D^k|v> = 2^{-k} (1 + k (alpha - 1/2) / alpha).
template <class Scalar>
Scalar wv_moment(int k, const Scalar& alpha) {
  validate_alpha(alpha);
  Scalar pow2(1);
  for (int i = 0; i < k; ++i) pow2 *= 2;
  return (Scalar(1) + Scalar(k) * (alpha - Scalar(1) / Scalar(2)) / alpha) / pow2;
}

/// Reduce the word <w| prod (eta_x D + (1-eta_x) E) |v> with DE -> c(D+E)
/// and <w|E -> (c/alpha)<w| until only <w|D^k|v> terms remain.
Rational rewrite_oracle(const BinaryWord& eta, const Rational& alpha);
/// The coefficients d_k of the reduction above.
std::vector<Rational> rewrite_coefficients(const BinaryWord& eta, const Rational& alpha);

enum class Regime { Bernoulli, Mpa };

template <class Scalar>
struct CylinderProbability {
  Scalar value;
  Regime regime = Regime::Bernoulli;
  bool assumes_mpa_limit = false;  // the alpha > 1/2 limit law is assumed to be the MPA measure
};

template <class Scalar>
Scalar bernoulli_prob(const BinaryWord& eta, const Scalar& alpha) {
  Scalar p(1);
  for (int i = 0; i < eta.length(); ++i) p *= eta[i] ? alpha : Scalar(1) - alpha;
  return p;
}

/// sum_k Z_k 2^{-k} (1 + k (alpha - 1/2)/alpha), valid for any alpha in (0,1).
template <class Scalar>
Scalar mpa_prob(const BinaryWord& eta, const Scalar& alpha) {
  const auto pv = dehp_partition(eta, alpha);
  Scalar sum(0);
  for (std::size_t k = 0; k < pv.Z.size(); ++k) sum += pv.Z[k] * wv_moment(static_cast<int>(k), alpha);
  return sum;
}

/// Cylinder probability of the limiting measure of the step process:
/// Bernoulli(alpha) product for alpha <= 1/2, matrix-product measure above.
template <class Scalar>
CylinderProbability<Scalar> stationary_prob(const BinaryWord& eta, const Scalar& alpha) {
  validate_alpha(alpha);
  if (alpha <= Scalar(1) / Scalar(2)) return {bernoulli_prob(eta, alpha), Regime::Bernoulli, false};
  return {mpa_prob(eta, alpha), Regime::Mpa, true};
}

std::string to_string(Regime r);

}  // namespace hltasep
