#include "hltasep/exact_laws.hpp"

#include <algorithm>
#include <stdexcept>

#include "hltasep/enumerate.hpp"

namespace hltasep {

namespace {

Rational rpow(const Rational& base, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

Rational bernoulli_term(int L, int ones, const Rational& alpha) {
  return rpow(alpha, ones) * rpow(Rational(1) - alpha, L - ones);
}

void require_block(int v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

bool is_mpa(const Rational& alpha) {
  validate_alpha(alpha);
  return alpha > Rational(1, 2);
}

using ClassKey = std::pair<int, int>;

/// Stationary mass of {0,1}^L grouped by (ones in the first `split` sites,
/// ones in the remaining sites), matrix-product regime.
std::map<ClassKey, Rational> mpa_class_table(int L, int split, const Rational& alpha) {
  if (L > kEnumerationCap) {
    throw std::invalid_argument("alpha > 1/2 laws enumerate {0,1}^L and are limited to L <= 18 (got L = " +
                                std::to_string(L) + ")");
  }
  const std::int64_t total = std::int64_t{1} << L;
  const std::int64_t chunk = std::min<std::int64_t>(total, 1024);
  const std::int64_t chunks = total / chunk;
  std::vector<std::map<ClassKey, Rational>> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t p = 0; p < chunks; ++p) {
    auto& local = partial[static_cast<std::size_t>(p)];
    for (std::int64_t mask = p * chunk; mask < (p + 1) * chunk; ++mask) {
      const BinaryWord eta = BinaryWord::from_mask(static_cast<std::uint64_t>(mask), L);
      int head = 0, tail = 0;
      for (int i = 0; i < L; ++i) (i < split ? head : tail) += eta[i];
      local[{head, tail}] += mpa_prob(eta, alpha);
    }
  }
  std::map<ClassKey, Rational> table;
  for (const auto& local : partial) {
    for (const auto& [k, v] : local) table[k] += v;
  }
  return table;
}

Rational lookup(const std::map<ClassKey, Rational>& table, int m, int n) {
  const auto it = table.find({m, n});
  return it == table.end() ? Rational(0) : it->second;
}

/// Sum over the (m, n) cells of the two-shock grid; cell(m, n) gives the
/// stationary mass of B_{m,n} in either regime.
template <class Cell>
Rational two_shock_exist_sum(int N, int M, Cell&& cell) {
  Rational sum = 0;
  for (int m = 0; m <= N - 1; ++m) {
    for (int n = 0; n <= M + N - m; ++n) sum += cell(m, n);
  }
  for (int m = N; m <= M + N; ++m) {
    for (int n = 0; n <= M; ++n) sum += cell(m, n);
  }
  return sum;
}

template <class Cell>
Rational two_shock_height3_sum(int s, int N, int M, Cell&& cell) {
  Rational sum = 0;
  for (int n = 1; n <= s; ++n) sum += cell(N - n, M + N + 1 - s + n);
  for (int m = N; m <= M + N; ++m) sum += cell(m, M + N + 1 - s);
  return sum;
}

}  // namespace

LawValue p_exist_one_shock(int M1, int M2, const Rational& alpha) {
  require_block(M1, "M1");
  require_block(M2, "M2");
  const int L = M1 + M2 + 1;
  LawValue out;
  if (!is_mpa(alpha)) {
    out.value = 0;
    for (int n = 0; n <= M1; ++n) out.value += binomial(L, n) * bernoulli_term(L, n, alpha);
    return out;
  }
  const auto table = mpa_class_table(L, 0, alpha);
  out.value = 0;
  for (int n = 0; n <= M1; ++n) out.value += lookup(table, 0, n);
  out.regime = Regime::Mpa;
  out.assumes_mpa_limit = true;
  return out;
}

LawValue p_height_one_shock(int m, int M1, int M2, const Rational& alpha) {
  require_block(M1, "M1");
  require_block(M2, "M2");
  if (m < 0 || m > M2) throw std::invalid_argument("p_height_one_shock: need 0 <= m <= M2");
  const int L = M1 + M2 + 1;
  LawValue out;
  if (!is_mpa(alpha)) {
    out.value = binomial(L, L - m) * bernoulli_term(L, L - m, alpha);
    return out;
  }
  out.value = lookup(mpa_class_table(L, 0, alpha), 0, L - m);
  out.regime = Regime::Mpa;
  out.assumes_mpa_limit = true;
  return out;
}

LawValue p_exist_two_shock(int N, int M, const Rational& alpha) {
  require_block(N, "N");
  require_block(M, "M");
  const int L = 2 * M + 2 * N + 1;
  LawValue out;
  if (!is_mpa(alpha)) {
    out.value = two_shock_exist_sum(N, M, [&](int m, int n) {
      return binomial(M + N, m) * binomial(M + N + 1, n) * bernoulli_term(L, m + n, alpha);
    });
    return out;
  }
  const auto table = mpa_class_table(L, M + N, alpha);
  out.value = two_shock_exist_sum(N, M, [&](int m, int n) { return lookup(table, m, n); });
  out.regime = Regime::Mpa;
  out.assumes_mpa_limit = true;
  return out;
}

LawValue p_height3_two_shock(int s, int N, int M, const Rational& alpha) {
  require_block(N, "N");
  require_block(M, "M");
  if (s < 0 || s > N) throw std::invalid_argument("p_height3_two_shock: need 0 <= s <= N");
  LawValue out;
  if (!is_mpa(alpha)) {
    const Rational a = alpha, b = Rational(1) - alpha;
    out.value = 0;
    for (int n = 1; n <= s; ++n) {
      out.value += binomial(M + N, N - n) * binomial(M + N + 1, M + N + 1 - s + n) * rpow(a, M + 2 * N + 1 - s) *
                   rpow(b, M + s);
    }
    for (int m = N; m <= M + N; ++m) {
      out.value +=
          binomial(M + N, m) * binomial(M + N + 1, M + N + 1 - s) * rpow(a, M + N + 1 + m - s) * rpow(b, M + N - m + s);
    }
    return out;
  }
  const auto table = mpa_class_table(2 * M + 2 * N + 1, M + N, alpha);
  out.value = two_shock_height3_sum(s, N, M, [&](int m, int n) { return lookup(table, m, n); });
  out.regime = Regime::Mpa;
  out.assumes_mpa_limit = true;
  return out;
}

LawValue evaluate(const LawQuery& q) {
  switch (q.family) {
    case LawFamily::OneShockExist: return p_exist_one_shock(q.p1, q.p2, q.alpha);
    case LawFamily::OneShockHeight: return p_height_one_shock(q.argument, q.p1, q.p2, q.alpha);
    case LawFamily::TwoShockExist: return p_exist_two_shock(q.p1, q.p2, q.alpha);
    case LawFamily::TwoShockHeight3: return p_height3_two_shock(q.argument, q.p1, q.p2, q.alpha);
  }
  throw std::logic_error("evaluate: unknown family");
}

std::map<std::int64_t, double> LawTable::as_double() const {
  std::map<std::int64_t, double> out;
  for (const auto& [k, v] : probabilities) out[k] = to_double(v);
  return out;
}

namespace {

LawTable exist_table(const LawValue& present) {
  LawTable t;
  t.probabilities[1] = present.value;
  t.probabilities[0] = Rational(1) - present.value;
  t.regime = present.regime;
  t.assumes_mpa_limit = present.assumes_mpa_limit;
  return t;
}

}  // namespace

LawTable one_shock_exist_law(int M1, int M2, const Rational& alpha) {
  return exist_table(p_exist_one_shock(M1, M2, alpha));
}

LawTable two_shock_exist_law(int N, int M, const Rational& alpha) {
  return exist_table(p_exist_two_shock(N, M, alpha));
}

LawTable one_shock_height_law(int M1, int M2, const Rational& alpha) {
  LawTable t;
  Rational rest = 1;
  for (int m = 0; m <= M2; ++m) {
    const auto v = p_height_one_shock(m, M1, M2, alpha);
    t.probabilities[m] = v.value;
    t.regime = v.regime;
    t.assumes_mpa_limit = v.assumes_mpa_limit;
    rest -= v.value;
  }
  t.probabilities[M2 + 1] = rest;
  return t;
}

LawTable two_shock_height3_law(int N, int M, const Rational& alpha) {
  LawTable t;
  Rational rest = 1;
  for (int s = 0; s <= N; ++s) {
    const auto v = p_height3_two_shock(s, N, M, alpha);
    t.probabilities[s] = v.value;
    t.regime = v.regime;
    t.assumes_mpa_limit = v.assumes_mpa_limit;
    rest -= v.value;
  }
  t.probabilities[N + 1] = rest;
  return t;
}

std::string to_string(LawFamily f) {
  switch (f) {
    case LawFamily::OneShockExist: return "one_shock_exist";
    case LawFamily::OneShockHeight: return "one_shock_height";
    case LawFamily::TwoShockExist: return "two_shock_exist";
    case LawFamily::TwoShockHeight3: return "two_shock_height3";
  }
  return "?";
}

LawFamily parse_law_family(const std::string& name) {
  for (auto f : {LawFamily::OneShockExist, LawFamily::OneShockHeight, LawFamily::TwoShockExist,
                 LawFamily::TwoShockHeight3}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown law family '" + name + "'");
}

std::string to_string(IdentityFamily f) {
  switch (f) {
    case IdentityFamily::OneShockExit: return "one_shock_exit";
    case IdentityFamily::OneShockHeights: return "one_shock_heights";
    case IdentityFamily::TwoShockExit: return "two_shock_exit";
    case IdentityFamily::TwoShockHeights: return "two_shock_heights";
  }
  return "?";
}

IdentityFamily parse_identity_family(const std::string& name) {
  for (auto f : {IdentityFamily::OneShockExit, IdentityFamily::OneShockHeights, IdentityFamily::TwoShockExit,
                 IdentityFamily::TwoShockHeights}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown identity family '" + name + "'");
}

std::vector<std::size_t> identity_sites(IdentityFamily f, int p1, int p2) {
  require_block(p1, "block length");
  require_block(p2, "block length");
  switch (f) {
    case IdentityFamily::OneShockExit:
    case IdentityFamily::OneShockHeights:
      return {1, static_cast<std::size_t>(p1 + p2 + 2)};
    case IdentityFamily::TwoShockExit:
    case IdentityFamily::TwoShockHeights:
      return {1, static_cast<std::size_t>(p1 + p2 + 1), static_cast<std::size_t>(2 * p1 + 2 * p2 + 2)};
  }
  throw std::logic_error("identity_sites: unknown family");
}

bool one_shock_exit_rhs(int M1, int, std::int64_t n_first, std::int64_t n_end) {
  return n_first - n_end >= M1 + 1;
}

std::pair<std::int64_t, std::int64_t> one_shock_heights_rhs(int M1, int M2, std::int64_t n_first,
                                                            std::int64_t n_end) {
  return {n_first, std::min<std::int64_t>(M1 + M2 + 1 - n_first + n_end, M2 + 1)};
}

bool two_shock_exit_rhs(int N, int M, const TwoShockCurrents& c) {
  return c.mid - c.end + std::min<std::int64_t>(N, c.first - c.mid) >= N + M + 1;
}

std::array<std::int64_t, 3> two_shock_heights_rhs(int N, int M, const TwoShockCurrents& c) {
  return {c.first, std::min<std::int64_t>(M, M + N - c.first + c.mid),
          std::min<std::int64_t>(N + 1, M + N + 1 - c.mid + c.end + std::max<std::int64_t>(0, N - c.first + c.mid))};
}

Observable identity_observable(IdentityFamily f, int p1, int p2, int component) {
  const auto sites = identity_sites(f, p1, p2);
  const auto cur = [](const SiteConfiguration& cfg, std::size_t x) { return height_count(cfg, Color::First, x); };
  std::string name = to_string(f);
  switch (f) {
    case IdentityFamily::OneShockExit:
      return {name, [=](const SiteConfiguration& cfg) -> std::int64_t {
                return one_shock_exit_rhs(p1, p2, cur(cfg, sites[0]), cur(cfg, sites[1])) ? 0 : 1;
              }};
    case IdentityFamily::OneShockHeights:
      if (component < 0 || component > 1) throw std::invalid_argument("one_shock_heights has components 0..1");
      return {name + "[" + std::to_string(component) + "]", [=](const SiteConfiguration& cfg) {
                const auto v = one_shock_heights_rhs(p1, p2, cur(cfg, sites[0]), cur(cfg, sites[1]));
                return component == 0 ? v.first : v.second;
              }};
    case IdentityFamily::TwoShockExit:
      return {name, [=](const SiteConfiguration& cfg) -> std::int64_t {
                const TwoShockCurrents c{cur(cfg, sites[0]), cur(cfg, sites[1]), cur(cfg, sites[2])};
                return two_shock_exit_rhs(p1, p2, c) ? 0 : 1;
              }};
    case IdentityFamily::TwoShockHeights:
      if (component < 0 || component > 2) throw std::invalid_argument("two_shock_heights has components 0..2");
      return {name + "[" + std::to_string(component) + "]", [=](const SiteConfiguration& cfg) {
                const TwoShockCurrents c{cur(cfg, sites[0]), cur(cfg, sites[1]), cur(cfg, sites[2])};
                return two_shock_heights_rhs(p1, p2, c)[static_cast<std::size_t>(component)];
              }};
  }
  throw std::logic_error("identity_observable: unknown family");
}

}  // namespace hltasep
