#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hltasep::cli {

/// Bad input: unknown keys, unparsable values, out-of-range parameters.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat section.key -> value store read from an INI file. Every key must be
/// listed in the schema; unknown sections or keys are rejected on load.
class Config {
 public:
  static Config load(const std::string& path);
  static Config parse(const std::string& text);

  /// Apply "section.key=value".
  void set(const std::string& assignment);
  void set(const std::string& section, const std::string& key, const std::string& value);

  bool has(const std::string& section, const std::string& key) const;
  std::optional<std::string> get(const std::string& section, const std::string& key) const;
  std::string require(const std::string& section, const std::string& key) const;
  std::string get_or(const std::string& section, const std::string& key, const std::string& fallback) const;
  long long get_int(const std::string& section, const std::string& key, long long fallback) const;
  double get_double(const std::string& section, const std::string& key, double fallback) const;

  std::vector<std::string> section_keys(const std::string& section) const;
  const std::map<std::string, std::string>& entries() const { return entries_; }

  /// "# section.key = value" lines for output metadata.
  std::string as_comment_block() const;

 private:
  void check(const std::string& section, const std::string& key) const;
  std::map<std::string, std::string> entries_;
};

std::vector<std::string> split_list(const std::string& text, char sep = ',');

}  // namespace hltasep::cli
