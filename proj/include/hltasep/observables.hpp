#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "hltasep/configuration.hpp"

namespace hltasep {

enum class OneShockVariant { Eta, EtaTilde };
enum class TwoShockVariant { Xi, XiTilde };

/// Holes on [1, M1], then either one second-class particle at M1+1 followed by
/// first-class particles on [M1+2, M1+M2+1] (Eta), or second-class particles
/// on all of [M1+1, M1+M2+1] (EtaTilde).
struct OneShockSpec {
  int M1 = 0;
  int M2 = 0;
  OneShockVariant variant = OneShockVariant::Eta;
};

/// Blocks of lengths N, M, M, 1, N; see build_initial for the colors.
struct TwoShockSpec {
  int N = 0;
  int M = 0;
  TwoShockVariant variant = TwoShockVariant::Xi;
};

/// Empty lattice; every particle comes from the reservoir.
struct StepSpec {};

using InitialSpec = std::variant<OneShockSpec, TwoShockSpec, StepSpec>;

SiteConfiguration build_initial(const InitialSpec& spec);

std::string describe(const InitialSpec& spec);

/// Position of the unique second-class particle, or its exit through site 1.
struct SecondClassPosition {
  bool exited = false;
  std::size_t site = 0;

  static SecondClassPosition at(std::size_t x) { return {false, x}; }
  static SecondClassPosition gone() { return {true, 0}; }
  friend bool operator==(const SecondClassPosition&, const SecondClassPosition&) = default;
};

/// Throws std::logic_error unless exactly one color-2 particle exists in the
/// window plus the exited multiset.
SecondClassPosition track_f(const SiteConfiguration& cfg);

/// Number of particles of the given color on sites >= x.
std::int64_t height_count(const SiteConfiguration& cfg, Color color, std::size_t x);

struct KPZScalingSpec {
  double a = 1.0;
  double varpi = 0.0;
  double t = 1.0;
};

struct KPZParameters {
  double alpha = 0.5;
  std::int64_t block = 0;
};

/// alpha = (1 + 2^{4/3} varpi t^{-1/3}) / 2 and block = floor(a t^{2/3}).
KPZParameters kpz_parameters(const KPZScalingSpec& spec);

/// A named integer-valued function of a configuration. Derived observables
/// (identity right-hand sides built from step-process currents) are encoded
/// the same way so that ensembles treat them uniformly.
struct Observable {
  std::string name;
  std::function<std::int64_t(const SiteConfiguration&)> evaluate;
};

namespace observables {

/// f(t) / g(t): site of the second-class particle, kExited after its exit.
inline constexpr std::int64_t kExited = -1;
Observable second_class_status();
/// 1 while the second-class particle is on the lattice, 0 after its exit.
Observable second_class_exists();
/// N_c(x,t); for the step process with color 1 this is the current N(x,t).
Observable height(Color color, std::size_t x);
/// Parse names like "f_status", "f_exists", "N2(1)", "cur(7)".
Observable parse(const std::string& name);

}  // namespace observables

/// CSV row (replica, t, observable, value); f_status exits print as "exited".
void write_observable_row(std::ostream& out, std::uint64_t replica, double t, const std::string& name,
                          std::int64_t value);

}  // namespace hltasep
