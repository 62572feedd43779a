#include "doctest.h"

#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "hltasep/exact_laws.hpp"
#include "hltasep/observables.hpp"
#include "hltasep/simulator.hpp"

using namespace hltasep;
using enum Color;

namespace {

struct CountWatch {
  std::size_t block = 0;
  bool ok = true;
  void on_event(const EventRecord&, const SiteConfiguration& c) {
    if (height_count(c, Second, 1) + c.exited_count(Second) != static_cast<std::int64_t>(block)) ok = false;
  }
  void on_finish(double, const SiteConfiguration&) {}
};

struct ThirdWatch {
  std::size_t block = 0;
  bool ok = true;
  void on_event(const EventRecord&, const SiteConfiguration& c) {
    if (height_count(c, Third, 1) + c.exited_count(Third) != static_cast<std::int64_t>(block)) ok = false;
  }
  void on_finish(double, const SiteConfiguration&) {}
};

struct StepCurrentWatch {
  bool ok = true;
  void on_event(const EventRecord&, const SiteConfiguration& c) {
    const std::size_t R = c.extent() + 1;
    for (std::size_t x = 1; x < R; ++x) {
      for (std::size_t y = x + 1; y <= R; ++y) {
        const auto d = height_count(c, First, x) - height_count(c, First, y);
        if (d < 0 || d > static_cast<std::int64_t>(y - x)) ok = false;
      }
    }
  }
  void on_finish(double, const SiteConfiguration&) {}
};

// f moves by one site per event, only along an edge touching it, or exits
// through an injection at site 1.
struct FTrackWatch {
  SecondClassPosition last;
  bool ok = true;
  void on_event(const EventRecord& e, const SiteConfiguration& c) {
    const auto now = track_f(c);
    if (now != last) {
      if (last.exited) {
        ok = false;
      } else if (now.exited) {
        if (e.kind != EventKind::Injection || last.site != 1) ok = false;
      } else {
        const auto d = static_cast<long>(now.site) - static_cast<long>(last.site);
        if (std::abs(d) != 1 || e.kind != EventKind::BulkSwap || e.site != std::min(now.site, last.site)) ok = false;
      }
    }
    last = now;
  }
  void on_finish(double, const SiteConfiguration&) {}
};

}  // namespace

TEST_CASE("initial condition builders") {
  CHECK(build_initial(OneShockSpec{1, 1, OneShockVariant::Eta}) == SiteConfiguration{Hole, Second, First});
  CHECK(build_initial(TwoShockSpec{1, 1, TwoShockVariant::XiTilde}) ==
        SiteConfiguration{Hole, Second, Hole, Third, Third});
  CHECK(build_initial(OneShockSpec{0, 0, OneShockVariant::Eta}) == SiteConfiguration{Second});
  CHECK(build_initial(OneShockSpec{2, 3, OneShockVariant::EtaTilde}) ==
        SiteConfiguration{Hole, Hole, Second, Second, Second, Second});
  CHECK(build_initial(StepSpec{}).extent() == 0);
  for (int N = 0; N <= 3; ++N) {
    for (int M = 0; M <= 3; ++M) {
      for (auto v : {TwoShockVariant::Xi, TwoShockVariant::XiTilde}) {
        const auto c = build_initial(TwoShockSpec{N, M, v});
        std::size_t r = c.extent();
        while (r > 0 && c.at(r) == Hole) --r;
        CHECK(r <= static_cast<std::size_t>(2 * N + 2 * M + 1));
      }
    }
  }
  CHECK_THROWS(build_initial(OneShockSpec{-1, 0, OneShockVariant::Eta}));
}

TEST_CASE("second class tracking") {
  CHECK(track_f(SiteConfiguration{Hole, Second, First}) == SecondClassPosition::at(2));
  SiteConfiguration gone{First, First};
  gone.add_exited(Second);
  CHECK(track_f(gone) == SecondClassPosition::gone());
  CHECK_THROWS_AS(track_f(SiteConfiguration{Second, Second}), std::logic_error);
  CHECK_THROWS_AS(track_f(SiteConfiguration{First}), std::logic_error);
}

TEST_CASE("height counts") {
  const SiteConfiguration c{First, Second, First};
  CHECK(height_count(c, First, 1) == 2);
  CHECK(height_count(c, Second, 3) == 0);
  CHECK(height_count(c, First, 3) == 1);
  CHECK(height_count(c, First, 9) == 0);
}

TEST_CASE("observable names") {
  const SiteConfiguration c{Hole, Second, First};
  CHECK(observables::parse("f_status").evaluate(c) == 2);
  CHECK(observables::parse("f_exists").evaluate(c) == 1);
  CHECK(observables::parse("N1(1)").evaluate(c) == 1);
  CHECK(observables::parse("N2(3)").evaluate(c) == 0);
  CHECK(observables::parse("cur(3)").evaluate(c) == 1);
  CHECK_THROWS_AS(observables::parse("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(observables::parse("N4(1)"), std::invalid_argument);
  std::ostringstream s;
  write_observable_row(s, 3, 2.5, "f_status", observables::kExited);
  CHECK(s.str() == "3,2.5,f_status,exited\n");
}

TEST_CASE("trajectory properties of the observables") {
  for (std::uint64_t r = 0; r < 300; ++r) {
    {
      SiteConfiguration c = build_initial(OneShockSpec{2, 3, OneShockVariant::EtaTilde});
      CountWatch w{4};
      SimulationClock clock(41, r);
      simulate_until(c, 0.7, 12.0, clock, w);
      CHECK(w.ok);
    }
    {
      SiteConfiguration c = build_initial(TwoShockSpec{2, 1, TwoShockVariant::XiTilde});
      ThirdWatch w{3};
      SimulationClock clock(42, r);
      simulate_until(c, 0.3, 12.0, clock, w);
      CHECK(w.ok);
    }
    {
      SiteConfiguration c;
      StepCurrentWatch w;
      SimulationClock clock(43, r);
      simulate_until(c, 0.5, 6.0, clock, w);
      CHECK(w.ok);
    }
    {
      SiteConfiguration c = build_initial(OneShockSpec{1, 2, OneShockVariant::Eta});
      FTrackWatch w{track_f(c)};
      SimulationClock clock(44, r);
      simulate_until(c, 0.5, 12.0, clock, w);
      CHECK(w.ok);
    }
  }
}

TEST_CASE("identity right-hand sides") {
  CHECK(one_shock_exit_rhs(1, 1, 3, 1));
  CHECK_FALSE(one_shock_exit_rhs(1, 1, 2, 1));
  CHECK(one_shock_heights_rhs(1, 2, 0, 0) == std::pair<std::int64_t, std::int64_t>{0, 3});
  CHECK(identity_sites(IdentityFamily::OneShockExit, 2, 2) == std::vector<std::size_t>{1, 6});
  CHECK(identity_sites(IdentityFamily::TwoShockHeights, 1, 1) == std::vector<std::size_t>{1, 3, 6});
  const auto obs = identity_observable(IdentityFamily::OneShockHeights, 1, 1, 1);
  CHECK(obs.evaluate(SiteConfiguration{}) == 2);
}

TEST_CASE("KPZ parameterization") {
  const auto p = kpz_parameters({1.0, 0.0, 1000.0});
  CHECK(p.alpha == 0.5);
  CHECK(p.block == 100);
  CHECK(kpz_parameters({1.0, 0.0, 8.0}).block == 4);
  CHECK(kpz_parameters({2.0, 0.0, 27.0}).block == 18);

  using boost::multiprecision::cpp_dec_float_50;
  const cpp_dec_float_50 hp =
      (1 + boost::multiprecision::cbrt(cpp_dec_float_50(16)) / boost::multiprecision::cbrt(cpp_dec_float_50(1000))) / 2;
  const auto q = kpz_parameters({1.0, 1.0, 1000.0});
  CHECK(std::abs(q.alpha - hp.convert_to<double>()) < 1e-15);
  CHECK(q.alpha == doctest::Approx(0.625992).epsilon(1e-6));
  CHECK_THROWS_AS(kpz_parameters({1.0, 10.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(kpz_parameters({0.0, 0.0, 1.0}), std::invalid_argument);
}
