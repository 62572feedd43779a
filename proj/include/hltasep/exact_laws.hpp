#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hltasep/dehp.hpp"
#include "hltasep/observables.hpp"
#include "hltasep/rational.hpp"

namespace hltasep {

enum class LawFamily { OneShockExist, OneShockHeight, TwoShockExist, TwoShockHeight3 };

/// params = (M1, M2) for one-shock families, (N, M) for two-shock families.
struct LawQuery {
  LawFamily family = LawFamily::OneShockExist;
  int p1 = 0;
  int p2 = 0;
  int argument = 0;  // m or s; ignored by the exist families
  Rational alpha;
};

struct LawValue {
  Rational value;
  Regime regime = Regime::Bernoulli;
  bool assumes_mpa_limit = false;
};

/// lim P(f(t) > 0) for eta_t.
LawValue p_exist_one_shock(int M1, int M2, const Rational& alpha);
/// lim P(N_2(1,t) = m) for the eta-tilde process, 0 <= m <= M2.
LawValue p_height_one_shock(int m, int M1, int M2, const Rational& alpha);
/// lim P(g(t) > 0) for xi_t.
LawValue p_exist_two_shock(int N, int M, const Rational& alpha);
/// lim P(N_3(1,t) = s) for the xi-tilde process, 0 <= s <= N.
LawValue p_height3_two_shock(int s, int N, int M, const Rational& alpha);

LawValue evaluate(const LawQuery& q);

/// Full laws as value -> probability. Exist laws use the f_exists encoding
/// (1 present, 0 exited); height laws include the capped top value, whose
/// probability is the complement of the others.
struct LawTable {
  std::map<std::int64_t, Rational> probabilities;
  Regime regime = Regime::Bernoulli;
  bool assumes_mpa_limit = false;

  std::map<std::int64_t, double> as_double() const;
};

LawTable one_shock_exist_law(int M1, int M2, const Rational& alpha);
LawTable one_shock_height_law(int M1, int M2, const Rational& alpha);
LawTable two_shock_exist_law(int N, int M, const Rational& alpha);
LawTable two_shock_height3_law(int N, int M, const Rational& alpha);

std::string to_string(LawFamily f);
LawFamily parse_law_family(const std::string& name);

/// Step-process functionals appearing on the right-hand side of the
/// finite-time identities. Currents are N(x,t) of one step trajectory.
enum class IdentityFamily { OneShockExit, OneShockHeights, TwoShockExit, TwoShockHeights };

std::string to_string(IdentityFamily f);
IdentityFamily parse_identity_family(const std::string& name);

/// Sites whose currents the functional reads: (1, M1+M2+2) for one-shock
/// families, (1, N+M+1, 2N+2M+2) for two-shock families.
std::vector<std::size_t> identity_sites(IdentityFamily f, int p1, int p2);

/// [N(1) - N(M1+M2+2) >= M1+1]; equals the law of [f(t) exited].
bool one_shock_exit_rhs(int M1, int M2, std::int64_t n_first, std::int64_t n_end);
/// (N(1), min{M1+M2+1 - N(1) + N(M1+M2+2), M2+1}); law of (N_1(1,t), N_2(1,t)).
std::pair<std::int64_t, std::int64_t> one_shock_heights_rhs(int M1, int M2, std::int64_t n_first,
                                                            std::int64_t n_end);

struct TwoShockCurrents {
  std::int64_t first = 0;  // N(1)
  std::int64_t mid = 0;    // N(N+M+1)
  std::int64_t end = 0;    // N(2N+2M+2)
};

/// [N(N+M+1) - N(2N+2M+2) + min{N, N(1) - N(N+M+1)} >= N+M+1]; law of [g(t) exited].
bool two_shock_exit_rhs(int N, int M, const TwoShockCurrents& c);
/// Law of (N_1(1,t), N_2(1,t), N_3(1,t)) for the xi-tilde process.
std::array<std::int64_t, 3> two_shock_heights_rhs(int N, int M, const TwoShockCurrents& c);

/// The functional (or one coordinate of it) as an observable of a step
/// configuration. component selects the tuple coordinate for the height
/// families (0-based) and is ignored for the exit families, which use the
/// f_exists encoding: 0 when the exit event holds, 1 otherwise.
Observable identity_observable(IdentityFamily f, int p1, int p2, int component = 0);

}  // namespace hltasep
