#include "config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace hltasep::cli {

namespace {

const std::map<std::string, std::set<std::string>>& schema() {
  static const std::map<std::string, std::set<std::string>> s{
      {"run", {"seed", "workers", "out"}},
      {"simulate",
       {"model", "M1", "M2", "N", "M", "alpha", "times", "replicas", "first_replica", "observables", "output"}},
      {"kpz", {"a", "varpi", "t"}},
      {"exact", {"family", "M1", "M2", "N", "M", "alpha", "argument", "eta", "output"}},
      {"verify", {"suite", "replica_scale", "sigma", "output"}},
      {"sweep", {"command", "output"}},
  };
  return s;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Config from_ptree(const boost::property_tree::ptree& tree) {
  Config c;
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) throw ConfigError("key '" + section + "' outside any section");
    for (const auto& [key, value] : body) c.set(section, key, value.data());
  }
  return c;
}

}  // namespace

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Config Config::parse(const std::string& text) {
  boost::property_tree::ptree tree;
  std::istringstream in(text);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return from_ptree(tree);
}

void Config::check(const std::string& section, const std::string& key) const {
  if (section == "grid") return;  // sweep axes name keys of the swept section
  const auto it = schema().find(section);
  if (it == schema().end()) throw ConfigError("unknown config section [" + section + "]");
  if (!it->second.count(key)) throw ConfigError("unknown key '" + key + "' in section [" + section + "]");
}

void Config::set(const std::string& assignment) {
  const auto eq = assignment.find('=');
  const auto dot = assignment.find('.');
  if (eq == std::string::npos || dot == std::string::npos || dot > eq) {
    throw ConfigError("override must look like section.key=value, got '" + assignment + "'");
  }
  set(trim(assignment.substr(0, dot)), trim(assignment.substr(dot + 1, eq - dot - 1)), trim(assignment.substr(eq + 1)));
}

void Config::set(const std::string& section, const std::string& key, const std::string& value) {
  check(section, key);
  entries_[section + "." + key] = trim(value);
}

bool Config::has(const std::string& section, const std::string& key) const {
  return entries_.count(section + "." + key) > 0;
}

std::optional<std::string> Config::get(const std::string& section, const std::string& key) const {
  const auto it = entries_.find(section + "." + key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

std::string Config::require(const std::string& section, const std::string& key) const {
  auto v = get(section, key);
  if (!v || v->empty()) throw ConfigError("missing required key '" + key + "' in section [" + section + "]");
  return *v;
}

std::string Config::get_or(const std::string& section, const std::string& key, const std::string& fallback) const {
  return get(section, key).value_or(fallback);
}

long long Config::get_int(const std::string& section, const std::string& key, long long fallback) const {
  const auto v = get(section, key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    const long long x = std::stoll(*v, &used);
    if (used != v->size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("[" + section + "] " + key + " must be an integer, got '" + *v + "'");
  }
}

double Config::get_double(const std::string& section, const std::string& key, double fallback) const {
  const auto v = get(section, key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    const double x = std::stod(*v, &used);
    if (used != v->size()) throw std::invalid_argument("trailing characters");
    return x;
  } catch (const std::exception&) {
    throw ConfigError("[" + section + "] " + key + " must be a number, got '" + *v + "'");
  }
}

std::vector<std::string> Config::section_keys(const std::string& section) const {
  std::vector<std::string> keys;
  const std::string prefix = section + ".";
  for (const auto& [k, v] : entries_) {
    if (k.rfind(prefix, 0) == 0) keys.push_back(k.substr(prefix.size()));
  }
  return keys;
}

std::string Config::as_comment_block() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += "# " + k + " = " + v + "\n";
  return out;
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == sep && depth == 0) {
      if (!trim(cur).empty()) out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

}  // namespace hltasep::cli
