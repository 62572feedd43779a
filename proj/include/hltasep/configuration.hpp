#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hltasep/color.hpp"

namespace hltasep {

/// State of a half-line open TASEP: a dense window of colors on sites 1..R,
/// implicit holes beyond R, and the multiset of colors that left the lattice
/// through site 1 when a particle was injected on top of them.
class SiteConfiguration {
 public:
  SiteConfiguration() = default;
  explicit SiteConfiguration(std::vector<Color> window) : window_(std::move(window)) {}
  SiteConfiguration(std::initializer_list<Color> window) : window_(window) {}

  /// Color at a 1-based site; sites beyond the window are holes.
  Color at(std::size_t site) const {
    return site >= 1 && site <= window_.size() ? window_[site - 1] : Color::Hole;
  }
  std::size_t extent() const { return window_.size(); }
  std::span<const Color> window() const { return window_; }

  std::uint32_t exited_count(Color c) const { return exited_[rank(c) - 1]; }
  std::uint32_t window_count(Color c) const;

  /// Swap sites x and x+1 if color(x) < color(x+1). Grows the window when a
  /// particle steps onto R+1.
  bool swap_if_ordered(std::size_t x) {
    const std::size_t r = window_.size();
    if (x < r) {
      Color& a = window_[x - 1];
      Color& b = window_[x];
      if (a < b) {
        std::swap(a, b);
        return true;
      }
      return false;
    }
    if (x == r && window_[r - 1] != Color::Hole) {
      window_.push_back(window_[r - 1]);
      window_[r - 1] = Color::Hole;
      return true;
    }
    return false;
  }

  struct InjectionOutcome {
    bool applied = false;
    std::optional<Color> exited;  // only colors 2 and 3 are reported
  };

  InjectionOutcome inject() {
    if (window_.empty()) {
      window_.push_back(Color::First);
      return {true, std::nullopt};
    }
    const Color prev = window_[0];
    if (prev == Color::First) return {};
    window_[0] = Color::First;
    if (prev == Color::Hole) return {true, std::nullopt};
    ++exited_[rank(prev) - 1];
    return {true, prev};
  }

  /// Record an exit directly (used when building states by hand).
  void add_exited(Color c, std::uint32_t count = 1) { exited_[rank(c) - 1] += count; }

  /// Equality ignores trailing holes in the window.
  friend bool operator==(const SiteConfiguration& a, const SiteConfiguration& b);

 private:
  std::vector<Color> window_;
  std::array<std::uint32_t, 4> exited_{};
};

std::string to_string(const SiteConfiguration& cfg);

/// Parse "H 2 1 | 2" style text: window colors, optional '|' then exited colors.
SiteConfiguration parse_configuration(const std::string& text);

}  // namespace hltasep
