#include "hltasep/dehp.hpp"

#include <cctype>
#include <map>

namespace hltasep {

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw std::invalid_argument("BinaryWord: length must be >= 1");
  for (auto b : bits_) {
    if (b > 1) throw std::invalid_argument("BinaryWord: bits must be 0 or 1");
  }
}

BinaryWord BinaryWord::parse(const std::string& text) {
  std::vector<std::uint8_t> bits;
  for (char ch : text) {
    if (ch == '0' || ch == '1') {
      bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    } else if (ch != ',' && ch != '(' && ch != ')' && !std::isspace(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("BinaryWord: unexpected character in '" + text + "'");
    }
  }
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::from_mask(std::uint64_t mask, int length) {
  if (length < 1 || length > 63) throw std::invalid_argument("BinaryWord: length out of range");
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) bits[static_cast<std::size_t>(i)] = (mask >> i) & 1U;
  return BinaryWord(std::move(bits));
}

int BinaryWord::ones() const {
  int n = 0;
  for (auto b : bits_) n += b;
  return n;
}

BinaryWord BinaryWord::appended(int bit) const {
  auto bits = bits_;
  bits.push_back(static_cast<std::uint8_t>(bit));
  return BinaryWord(std::move(bits));
}

std::string BinaryWord::str() const {
  std::string s;
  for (auto b : bits_) s += static_cast<char>('0' + b);
  return s;
}

ClusterStats cluster_stats(const BinaryWord& eta) {
  ClusterStats st;
  const int L = eta.length();
  int i = 0;
  auto run = [&](int bit) {
    int n = 0;
    while (i < L && eta[i] == bit) {
      ++n;
      ++i;
    }
    return n;
  };
  st.tau.push_back(run(0));
  while (i < L) {
    st.sigma.push_back(run(1));
    st.tau.push_back(run(0));
  }
  st.A = static_cast<int>(st.sigma.size());
  for (int s : st.sigma) st.ell += s;

  st.Psi.assign(static_cast<std::size_t>(st.A + 1), 0);
  for (int k = st.A - 1; k >= 0; --k) st.Psi[k] = st.Psi[k + 1] + st.sigma[k];
  st.Phi.assign(static_cast<std::size_t>(st.A + 2), 0);
  for (int k = st.A; k >= 0; --k) st.Phi[k] = st.Phi[k + 1] + st.tau[k];
  return st;
}

NodeKind dehp_node_kind(const ClusterStats& st, int x, int y) {
  // (x, y) with Phi_{j+1} < y <= Phi_j is a one-child node when x = Psi_{j+1}
  // and a two-children node when x > Psi_{j+1}.
  for (int j = 0; j <= st.A; ++j) {
    if (st.phi(j + 1) < y && y <= st.phi(j)) {
      const int edge = st.psi(j + 1);
      if (x == edge) return NodeKind::OneChild;
      if (x > edge && x <= st.psi(1)) return NodeKind::TwoChildren;
      return NodeKind::Unclassified;
    }
  }
  return NodeKind::Unclassified;
}

namespace {

struct LongestFirst {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  }
};

}  // namespace

std::vector<Rational> rewrite_coefficients(const BinaryWord& eta, const Rational& alpha) {
  validate_alpha(alpha);
  const Rational c = dehp_c<Rational>();
  const Rational c_alpha = c / alpha;

  std::string word;
  for (int i = 0; i < eta.length(); ++i) word += eta[i] ? 'D' : 'E';

  // Every rule shortens a word by one letter, so handling the longest words
  // first merges all contributions to a word before it is rewritten.
  std::map<std::string, Rational, LongestFirst> pending;
  pending[word] = 1;
  std::vector<Rational> d(static_cast<std::size_t>(eta.length() + 1), Rational(0));
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string& w = node.key();
    const Rational& coef = node.mapped();
    if (w.find('E') == std::string::npos) {
      d[w.size()] += coef;
    } else if (w.front() == 'E') {
      pending[w.substr(1)] += coef * c_alpha;
    } else {
      const auto at = w.rfind("DE");
      pending[w.substr(0, at) + "D" + w.substr(at + 2)] += coef * c;
      pending[w.substr(0, at) + "E" + w.substr(at + 2)] += coef * c;
    }
  }
  return d;
}

Rational rewrite_oracle(const BinaryWord& eta, const Rational& alpha) {
  const auto d = rewrite_coefficients(eta, alpha);
  Rational sum = 0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] != 0) sum += d[k] * wv_moment(static_cast<int>(k), alpha);
  }
  return sum;
}

std::string to_string(Regime r) { return r == Regime::Bernoulli ? "bernoulli" : "mpa"; }

}  // namespace hltasep
