#include "hltasep/observables.hpp"

#include <cmath>
#include <ostream>
#include <regex>
#include <stdexcept>

namespace hltasep {

namespace {

void require_nonnegative(int v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

struct InitialBuilder {
  SiteConfiguration operator()(const OneShockSpec& s) const {
    require_nonnegative(s.M1, "M1");
    require_nonnegative(s.M2, "M2");
    const Color tail = s.variant == OneShockVariant::Eta ? Color::First : Color::Second;
    std::vector<Color> w(static_cast<std::size_t>(s.M1 + s.M2 + 1), Color::Hole);
    w[s.M1] = Color::Second;
    for (int x = s.M1 + 2; x <= s.M1 + s.M2 + 1; ++x) w[x - 1] = tail;
    return SiteConfiguration(std::move(w));
  }

  SiteConfiguration operator()(const TwoShockSpec& s) const {
    require_nonnegative(s.N, "N");
    require_nonnegative(s.M, "M");
    const int N = s.N, M = s.M;
    std::vector<Color> w(static_cast<std::size_t>(2 * N + 2 * M + 1), Color::Hole);
    auto fill = [&](int lo, int hi, Color c) {
      for (int x = lo; x <= hi; ++x) w[x - 1] = c;
    };
    if (s.variant == TwoShockVariant::Xi) {
      fill(N + 1, N + M, Color::First);
      fill(N + 2 * M + 1, N + 2 * M + 1, Color::Second);
      fill(N + 2 * M + 2, 2 * N + 2 * M + 1, Color::First);
    } else {
      fill(N + 1, N + M, Color::Second);
      fill(N + 2 * M + 1, 2 * N + 2 * M + 1, Color::Third);
    }
    return SiteConfiguration(std::move(w));
  }

  SiteConfiguration operator()(const StepSpec&) const { return SiteConfiguration{}; }
};

}  // namespace

SiteConfiguration build_initial(const InitialSpec& spec) { return std::visit(InitialBuilder{}, spec); }

std::string describe(const InitialSpec& spec) {
  struct Describer {
    std::string operator()(const OneShockSpec& s) const {
      return std::string(s.variant == OneShockVariant::Eta ? "eta" : "eta_tilde") + "(M1=" + std::to_string(s.M1) +
             ",M2=" + std::to_string(s.M2) + ")";
    }
    std::string operator()(const TwoShockSpec& s) const {
      return std::string(s.variant == TwoShockVariant::Xi ? "xi" : "xi_tilde") + "(N=" + std::to_string(s.N) +
             ",M=" + std::to_string(s.M) + ")";
    }
    std::string operator()(const StepSpec&) const { return "step"; }
  };
  return std::visit(Describer{}, spec);
}

SecondClassPosition track_f(const SiteConfiguration& cfg) {
  const std::uint32_t in_window = cfg.window_count(Color::Second);
  const std::uint32_t gone = cfg.exited_count(Color::Second);
  if (in_window + gone != 1) {
    throw std::logic_error("track_f: expected exactly one second-class particle, found " +
                           std::to_string(in_window + gone));
  }
  if (gone == 1) return SecondClassPosition::gone();
  for (std::size_t x = 1; x <= cfg.extent(); ++x) {
    if (cfg.at(x) == Color::Second) return SecondClassPosition::at(x);
  }
  throw std::logic_error("track_f: unreachable");
}

std::int64_t height_count(const SiteConfiguration& cfg, Color color, std::size_t x) {
  if (x < 1) throw std::invalid_argument("height_count: site must be >= 1");
  std::int64_t n = 0;
  const auto w = cfg.window();
  for (std::size_t i = x - 1; i < w.size(); ++i) n += (w[i] == color);
  return n;
}

KPZParameters kpz_parameters(const KPZScalingSpec& spec) {
  if (!(spec.a > 0.0) || !(spec.t > 0.0) || !std::isfinite(spec.varpi)) {
    throw std::invalid_argument("kpz_parameters: need a > 0, t > 0 and finite varpi");
  }
  KPZParameters p;
  p.alpha = (1.0 + std::cbrt(16.0) * spec.varpi / std::cbrt(spec.t)) / 2.0;
  if (!(p.alpha > 0.0 && p.alpha < 1.0)) {
    throw std::invalid_argument("kpz_parameters: derived alpha " + std::to_string(p.alpha) + " outside (0,1)");
  }
  // floor(a t^{2/3}) is the largest b with b^3 <= a^3 t^2; correct the
  // floating-point estimate against that integer criterion.
  const long double target = static_cast<long double>(spec.a) * spec.a * spec.a * spec.t * spec.t;
  auto cube = [](std::int64_t b) { return static_cast<long double>(b) * b * b; };
  std::int64_t b = static_cast<std::int64_t>(std::floor(spec.a * std::cbrt(spec.t * spec.t)));
  while (b > 0 && cube(b) > target) --b;
  while (cube(b + 1) <= target) ++b;
  p.block = b;
  return p;
}

namespace observables {

Observable second_class_status() {
  return {"f_status", [](const SiteConfiguration& c) {
            const auto p = track_f(c);
            return p.exited ? kExited : static_cast<std::int64_t>(p.site);
          }};
}

Observable second_class_exists() {
  return {"f_exists", [](const SiteConfiguration& c) -> std::int64_t { return track_f(c).exited ? 0 : 1; }};
}

Observable height(Color color, std::size_t x) {
  return {"N" + std::to_string(rank(color)) + "(" + std::to_string(x) + ")",
          [color, x](const SiteConfiguration& c) { return height_count(c, color, x); }};
}

Observable parse(const std::string& name) {
  if (name == "f_status" || name == "g_status") {
    auto o = second_class_status();
    o.name = name;
    return o;
  }
  if (name == "f_exists" || name == "g_exists") {
    auto o = second_class_exists();
    o.name = name;
    return o;
  }
  static const std::regex height_re(R"(N([123])\((\d+)\))");
  static const std::regex current_re(R"(cur\((\d+)\))");
  std::smatch m;
  if (std::regex_match(name, m, height_re)) {
    const auto x = std::stoul(m[2]);
    if (x < 1) throw std::invalid_argument("observable site must be >= 1");
    return height(static_cast<Color>(std::stoi(m[1])), x);
  }
  if (std::regex_match(name, m, current_re)) {
    const auto x = std::stoul(m[1]);
    if (x < 1) throw std::invalid_argument("observable site must be >= 1");
    auto o = height(Color::First, x);
    o.name = name;
    return o;
  }
  throw std::invalid_argument("unknown observable '" + name + "'");
}

}  // namespace observables

void write_observable_row(std::ostream& out, std::uint64_t replica, double t, const std::string& name,
                          std::int64_t value) {
  out << replica << ',' << t << ',' << name << ',';
  if ((name == "f_status" || name == "g_status") && value == observables::kExited) {
    out << "exited";
  } else {
    out << value;
  }
  out << '\n';
}

}  // namespace hltasep
