#include "hltasep/configuration.hpp"

#include <algorithm>
#include <sstream>

namespace hltasep {

std::uint32_t SiteConfiguration::window_count(Color c) const {
  return static_cast<std::uint32_t>(std::count(window_.begin(), window_.end(), c));
}

bool operator==(const SiteConfiguration& a, const SiteConfiguration& b) {
  if (a.exited_ != b.exited_) return false;
  const std::size_t n = std::max(a.extent(), b.extent());
  for (std::size_t x = 1; x <= n; ++x) {
    if (a.at(x) != b.at(x)) return false;
  }
  return true;
}

std::string to_string(const SiteConfiguration& cfg) {
  std::string out = "[";
  for (std::size_t x = 1; x <= cfg.extent(); ++x) {
    if (x > 1) out += ' ';
    out += to_string(cfg.at(x));
  }
  out += ']';
  for (Color c : {Color::Second, Color::Third}) {
    if (cfg.exited_count(c) > 0) {
      out += " exited{" + to_string(c) + "x" + std::to_string(cfg.exited_count(c)) + "}";
    }
  }
  return out;
}

SiteConfiguration parse_configuration(const std::string& text) {
  std::istringstream in(text);
  std::vector<Color> window;
  std::vector<Color> exited;
  bool after_bar = false;
  std::string tok;
  while (in >> tok) {
    if (tok == "|") {
      after_bar = true;
      continue;
    }
    (after_bar ? exited : window).push_back(parse_color(tok));
  }
  SiteConfiguration cfg(std::move(window));
  for (Color c : exited) {
    if (c != Color::Second && c != Color::Third) {
      throw std::invalid_argument("only colors 2 and 3 can be recorded as exited");
    }
    cfg.add_exited(c);
  }
  return cfg;
}

}  // namespace hltasep
