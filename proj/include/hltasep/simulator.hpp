#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hltasep/configuration.hpp"
#include "hltasep/rng.hpp"

namespace hltasep {

enum class EventKind : std::uint8_t { Injection, BulkSwap };
enum class EventEffect : std::uint8_t { Applied, Rejected };

struct EventRecord {
  double time = 0.0;
  EventKind kind = EventKind::Injection;
  std::size_t site = 0;  // left site of the swapped edge; 0 for injections
  EventEffect effect = EventEffect::Rejected;
  std::optional<Color> exited;

  friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

/// Time and random stream of one trajectory. A drawn-but-not-yet-reached
/// event time is kept across calls, so splitting a run into several
/// simulate_until() calls reproduces the uninterrupted trajectory exactly.
struct SimulationClock {
  SimulationClock(std::uint64_t seed, std::uint64_t replica) : rng(seed, replica) {}

  double t = 0.0;
  ReplicaRng rng;
  std::optional<double> pending;
};

template <class T>
concept SimulationObserver = requires(T& o, const EventRecord& e, const SiteConfiguration& c, double t) {
  o.on_event(e, c);
  o.on_finish(t, c);
};

/// Observer that records every event; used for replay and determinism checks.
struct EventLog {
  std::vector<EventRecord> events;
  void on_event(const EventRecord& e, const SiteConfiguration&) { events.push_back(e); }
  void on_finish(double, const SiteConfiguration&) {}
};

/// Swap sites x, x+1 when color(x) < color(x+1). Returns whether anything moved.
bool apply_bulk_swap(SiteConfiguration& cfg, std::size_t x);

/// Create a first-class particle at site 1 unless site 1 already holds one.
SiteConfiguration::InjectionOutcome apply_injection(SiteConfiguration& cfg);

void validate_rate(double alpha);
void validate_horizon(double t_end, double t_now);

/// Advance cfg from clock.t to t_end. Events are sampled by thinning over the
/// boundary clock (rate alpha) and the R bulk edges of the active window (rate
/// 1 each); events with no effect are reported as rejected. Every sampled
/// event is passed to the observers, and each observer's on_finish runs at
/// t_end.
template <SimulationObserver... Observers>
void simulate_until(SiteConfiguration& cfg, double alpha, double t_end, SimulationClock& clock,
                    Observers&... observers) {
  validate_rate(alpha);
  validate_horizon(t_end, clock.t);
  for (;;) {
    const double rate = alpha + static_cast<double>(cfg.extent());
    if (!clock.pending) clock.pending = clock.t + clock.rng.exponential(rate);
    if (*clock.pending > t_end) break;
    clock.t = *clock.pending;
    clock.pending.reset();

    EventRecord ev;
    ev.time = clock.t;
    const double u = clock.rng.uniform01() * rate;
    if (u < alpha || cfg.extent() == 0) {
      ev.kind = EventKind::Injection;
      const auto out = cfg.inject();
      ev.effect = out.applied ? EventEffect::Applied : EventEffect::Rejected;
      ev.exited = out.exited;
    } else {
      std::size_t x = static_cast<std::size_t>(u - alpha) + 1;
      if (x > cfg.extent()) x = cfg.extent();
      ev.kind = EventKind::BulkSwap;
      ev.site = x;
      ev.effect = cfg.swap_if_ordered(x) ? EventEffect::Applied : EventEffect::Rejected;
    }
    (observers.on_event(ev, cfg), ...);
  }
  clock.t = t_end;
  (observers.on_finish(t_end, cfg), ...);
}

}  // namespace hltasep
