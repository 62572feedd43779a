#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hltasep {

// Particle classes ordered by priority: a smaller color behaves as a particle
// towards any larger color. Hole is the maximal rank.
enum class Color : std::uint8_t { First = 1, Second = 2, Third = 3, Hole = 4 };

inline constexpr int rank(Color c) { return static_cast<int>(c); }

inline std::string to_string(Color c) {
  switch (c) {
    case Color::First: return "1";
    case Color::Second: return "2";
    case Color::Third: return "3";
    case Color::Hole: return "H";
  }
  return "?";
}

inline Color parse_color(std::string_view s) {
  if (s == "1") return Color::First;
  if (s == "2") return Color::Second;
  if (s == "3") return Color::Third;
  if (s == "H" || s == "h" || s == "hole" || s == "inf") return Color::Hole;
  throw std::invalid_argument("unknown color '" + std::string(s) + "'");
}

}  // namespace hltasep
