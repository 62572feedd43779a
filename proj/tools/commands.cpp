#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "config.hpp"
#include "hltasep/dehp.hpp"
#include "hltasep/ensemble.hpp"
#include "hltasep/exact_laws.hpp"
#include "hltasep/observables.hpp"
#include "hltasep/suites.hpp"

namespace hltasep::cli {

namespace {

namespace fs = std::filesystem;

struct RunSettings {
  std::uint64_t seed = 1;
  int workers = 0;
  fs::path out_dir = ".";
};

/// Header, rows and metadata of one output file.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const fs::path& path, const Table& table, const std::string& metadata) {
  fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
  for (std::size_t i = 0; i < table.header.size(); ++i) f << (i ? "," : "") << table.header[i];
  f << '\n' << metadata;
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) f << (i ? "," : "") << row[i];
    f << '\n';
  }
}

std::string metadata_block(const std::string& command, const Config& cfg, const RunSettings& run) {
  std::ostringstream s;
  s << "# hltasep " << command << "\n# seed = " << run.seed << "\n# rng = xoshiro256** keyed by (seed, replica)\n"
    << cfg.as_comment_block();
  return s.str();
}

std::string num(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

int get_block(const Config& cfg, const std::string& section, const std::string& key) {
  const long long v = cfg.get_int(section, key, 0);
  if (v < 0 || v > 100000) throw ConfigError("[" + section + "] " + key + " must lie in 0..100000");
  return static_cast<int>(v);
}

Rational get_alpha(const Config& cfg, const std::string& section) {
  Rational a;
  try {
    a = parse_rational(cfg.require(section, "alpha"));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("[" + section + "] alpha: " + e.what());
  }
  if (!(a > 0 && a < 1)) throw ConfigError("[" + section + "] alpha must lie in (0,1), got " + to_string(a));
  return a;
}

// ---------------------------------------------------------------- simulate

struct SimulationSetup {
  EnsembleSpec spec;
  int p1 = 0, p2 = 0;
};

Observable parse_observable(const std::string& name, const std::string& model, int p1, int p2) {
  static const std::regex identity_re(R"((one_shock_exit|one_shock_heights|two_shock_exit|two_shock_heights)(\[(\d)\])?)");
  std::smatch m;
  if (std::regex_match(name, m, identity_re)) {
    if (model != "step") throw ConfigError("observable '" + name + "' is a step-process functional; use model = step");
    return identity_observable(parse_identity_family(m[1]), p1, p2, m[3].matched ? std::stoi(m[3]) : 0);
  }
  try {
    return observables::parse(name);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

SimulationSetup simulation_setup(const Config& cfg, const RunSettings& run) {
  SimulationSetup s;
  const std::string model = cfg.get_or("simulate", "model", "step");
  const bool kpz = cfg.has("kpz", "t") || cfg.has("kpz", "a") || cfg.has("kpz", "varpi");
  double alpha = 0.0;
  std::vector<double> times;
  if (kpz) {
    if (cfg.has("simulate", "alpha")) throw ConfigError("[simulate] alpha conflicts with [kpz]; alpha is derived");
    const KPZScalingSpec k{cfg.get_double("kpz", "a", 1.0), cfg.get_double("kpz", "varpi", 0.0),
                           cfg.get_double("kpz", "t", 1.0)};
    KPZParameters kp;
    try {
      kp = kpz_parameters(k);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    alpha = kp.alpha;
    s.p1 = s.p2 = static_cast<int>(kp.block);
    times.push_back(k.t);
  } else {
    alpha = to_double(get_alpha(cfg, "simulate"));
  }
  if (model == "eta" || model == "eta_tilde" || (model == "step" && (cfg.has("simulate", "M1") || cfg.has("simulate", "M2")))) {
    if (!kpz) {
      s.p1 = get_block(cfg, "simulate", "M1");
      s.p2 = get_block(cfg, "simulate", "M2");
    }
  } else if (model == "xi" || model == "xi_tilde" || model == "step") {
    if (!kpz) {
      s.p1 = get_block(cfg, "simulate", "N");
      s.p2 = get_block(cfg, "simulate", "M");
    }
  } else {
    throw ConfigError("[simulate] model must be one of eta, eta_tilde, xi, xi_tilde, step");
  }

  if (model == "eta") s.spec.initial = OneShockSpec{s.p1, s.p2, OneShockVariant::Eta};
  if (model == "eta_tilde") s.spec.initial = OneShockSpec{s.p1, s.p2, OneShockVariant::EtaTilde};
  if (model == "xi") s.spec.initial = TwoShockSpec{s.p1, s.p2, TwoShockVariant::Xi};
  if (model == "xi_tilde") s.spec.initial = TwoShockSpec{s.p1, s.p2, TwoShockVariant::XiTilde};
  if (model == "step") s.spec.initial = StepSpec{};

  if (cfg.has("simulate", "times")) {
    times.clear();
    for (const auto& t : split_list(cfg.require("simulate", "times"))) {
      try {
        times.push_back(std::stod(t));
      } catch (const std::exception&) {
        throw ConfigError("[simulate] times: cannot parse '" + t + "'");
      }
    }
  }
  if (times.empty()) throw ConfigError("[simulate] times is required");

  const long long replicas = cfg.get_int("simulate", "replicas", 1000);
  if (replicas < 1) throw ConfigError("[simulate] replicas must be >= 1");
  const long long first = cfg.get_int("simulate", "first_replica", 0);
  if (first < 0) throw ConfigError("[simulate] first_replica must be >= 0");

  std::string default_obs = "cur(1)";
  if (model == "eta" || model == "xi") default_obs = "f_status";
  if (model == "eta_tilde") default_obs = "N1(1),N2(1)";
  if (model == "xi_tilde") default_obs = "N1(1),N2(1),N3(1)";
  for (const auto& name : split_list(cfg.get_or("simulate", "observables", default_obs))) {
    s.spec.observables.push_back(parse_observable(name, model, s.p1, s.p2));
  }

  s.spec.alpha = alpha;
  s.spec.times = times;
  s.spec.replicas = static_cast<std::uint64_t>(replicas);
  s.spec.first_replica = static_cast<std::uint64_t>(first);
  s.spec.seed = run.seed;
  s.spec.workers = run.workers;
  try {
    validate(s.spec);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return s;
}

std::string format_value(const std::string& name, std::int64_t v) {
  if ((name == "f_status" || name == "g_status") && v == observables::kExited) return "exited";
  return std::to_string(v);
}

Table simulate_table(const Config& cfg, const RunSettings& run, std::ostream& out) {
  const auto setup = simulation_setup(cfg, run);
  const auto res = run_ensemble(setup.spec);
  Table t{{"replica", "t", "observable", "value"}, {}};
  for (std::uint64_t r = 0; r < res.replicas; ++r) {
    for (std::size_t i = 0; i < res.times.size(); ++i) {
      for (std::size_t j = 0; j < res.names.size(); ++j) {
        t.rows.push_back({std::to_string(res.first_replica + r), num(res.times[i]), res.names[j],
                          format_value(res.names[j], res.value(r, i, j))});
      }
    }
  }
  out << "alpha = " << num(setup.spec.alpha) << ", replicas = " << res.replicas << "\n";
  out << "t,observable,value,count,frequency\n";
  for (std::size_t i = 0; i < res.times.size(); ++i) {
    for (std::size_t j = 0; j < res.names.size(); ++j) {
      const auto d = res.distribution(i, j);
      for (const auto& [v, c] : d.counts) {
        out << num(res.times[i]) << ',' << res.names[j] << ',' << format_value(res.names[j], v) << ',' << c << ','
            << num(static_cast<double>(c) / static_cast<double>(d.n)) << '\n';
      }
    }
  }
  return t;
}

// ------------------------------------------------------------------- exact

Table exact_table(const Config& cfg) {
  const std::string family = cfg.require("exact", "family");
  const Rational alpha = get_alpha(cfg, "exact");
  if (family == "dehp") {
    BinaryWord eta = BinaryWord::parse("0");
    try {
      eta = BinaryWord::parse(cfg.require("exact", "eta"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("[exact] eta: ") + e.what());
    }
    const auto p = stationary_prob(eta, alpha);
    const auto pv = dehp_partition(eta, alpha);
    std::string z;
    for (std::size_t k = 0; k < pv.Z.size(); ++k) z += (k ? " " : "") + to_string(pv.Z[k]);
    return {{"eta", "alpha", "regime", "probability", "probability_exact", "Z", "assumes_mpa_limit"},
            {{eta.str(), to_string(alpha), to_string(p.regime), num(to_double(p.value)), to_string(p.value), z,
              p.assumes_mpa_limit ? "true" : "false"}}};
  }

  LawFamily f;
  try {
    f = parse_law_family(family);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(e.what()) + " (expected one_shock_exist, one_shock_height, two_shock_exist, "
                                              "two_shock_height3 or dehp)");
  }
  const bool one = f == LawFamily::OneShockExist || f == LawFamily::OneShockHeight;
  const int p1 = get_block(cfg, "exact", one ? "M1" : "N");
  const int p2 = get_block(cfg, "exact", one ? "M2" : "M");

  Table t{{"family", one ? "M1" : "N", one ? "M2" : "M", "alpha", "value", "probability", "probability_exact",
           "regime", "assumes_mpa_limit"},
          {}};
  auto row = [&](const std::string& value, const Rational& p, Regime r, bool flag) {
    t.rows.push_back({family, std::to_string(p1), std::to_string(p2), to_string(alpha), value, num(to_double(p)),
                      to_string(p), to_string(r), flag ? "true" : "false"});
  };
  if (cfg.has("exact", "argument")) {
    const auto arg = static_cast<int>(cfg.get_int("exact", "argument", 0));
    const auto v = evaluate(LawQuery{f, p1, p2, arg, alpha});
    row(std::to_string(arg), v.value, v.regime, v.assumes_mpa_limit);
    return t;
  }
  LawTable law;
  switch (f) {
    case LawFamily::OneShockExist: law = one_shock_exist_law(p1, p2, alpha); break;
    case LawFamily::OneShockHeight: law = one_shock_height_law(p1, p2, alpha); break;
    case LawFamily::TwoShockExist: law = two_shock_exist_law(p1, p2, alpha); break;
    case LawFamily::TwoShockHeight3: law = two_shock_height3_law(p1, p2, alpha); break;
  }
  for (const auto& [v, p] : law.probabilities) {
    std::string label = std::to_string(v);
    if (f == LawFamily::OneShockExist || f == LawFamily::TwoShockExist) label = v ? "present" : "exited";
    row(label, p, law.regime, law.assumes_mpa_limit);
  }
  return t;
}

nlohmann::json table_json(const Table& t) {
  auto rows = nlohmann::json::array();
  for (const auto& r : t.rows) {
    nlohmann::json o;
    for (std::size_t i = 0; i < t.header.size(); ++i) o[t.header[i]] = r[i];
    rows.push_back(o);
  }
  return rows;
}

void print_table(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << t.header[i];
  out << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << r[i];
    out << '\n';
  }
}

// ------------------------------------------------------------------ verify

int run_suite(const std::vector<CriterionFn>& fns, const std::string& name, const Config& cfg,
              const RunSettings& run, std::ostream& out, bool print_checks) {
  SuiteOptions o;
  o.seed = run.seed;
  o.workers = run.workers;
  o.replica_scale = cfg.get_double("verify", "replica_scale", 1.0);
  o.policy.sigma = cfg.get_double("verify", "sigma", 4.0);
  if (!(o.replica_scale > 0.0)) throw ConfigError("[verify] replica_scale must be positive");
  if (!(o.policy.sigma > 0.0)) throw ConfigError("[verify] sigma must be positive");

  nlohmann::json report{{"suite", name}, {"seed", run.seed}, {"replica_scale", o.replica_scale},
                        {"policy", o.policy.describe()}};
  auto& arr = report["criteria"] = nlohmann::json::array();
  bool all = true;
  for (const auto& fn : fns) {
    const auto r = fn(o);
    all = all && r.pass;
    out << r.summary() << '\n';
    if (print_checks || !r.pass) {
      for (const auto& c : r.checks) out << "    " << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    arr.push_back(r.to_json());
  }
  report["pass"] = all;
  const fs::path path = run.out_dir / cfg.get_or("verify", "output", "verify_" + name + ".json");
  fs::create_directories(run.out_dir);
  std::ofstream(path) << report.dump(2) << '\n';
  out << (all ? "suite " + name + " passed" : "suite " + name + " FAILED") << "; report: " << path.string() << '\n';
  return all ? kOk : kVerificationFailed;
}

// ------------------------------------------------------------------- sweep

Table sweep_table(const Config& base, const RunSettings& run, std::ostream& out) {
  const std::string command = base.require("sweep", "command");
  if (command != "simulate" && command != "exact") throw ConfigError("[sweep] command must be simulate or exact");
  const auto axes = base.section_keys("grid");
  if (axes.empty()) throw ConfigError("sweep needs at least one [grid] axis");
  std::vector<std::vector<std::string>> values;
  for (const auto& a : axes) {
    values.push_back(split_list(*base.get("grid", a)));
    if (values.back().empty()) throw ConfigError("[grid] " + a + " has no values");
  }

  Table all;
  std::vector<std::size_t> idx(axes.size(), 0);
  for (;;) {
    Config point = base;
    std::vector<std::string> prefix;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      point.set(command, axes[i], values[i][idx[i]]);
      prefix.push_back(values[i][idx[i]]);
    }
    std::ostringstream sink;
    Table t = command == "exact" ? exact_table(point) : simulate_table(point, run, sink);
    if (all.header.empty()) {
      all.header = axes;
      all.header.insert(all.header.end(), t.header.begin(), t.header.end());
    }
    for (auto& r : t.rows) {
      std::vector<std::string> full = prefix;
      full.insert(full.end(), r.begin(), r.end());
      all.rows.push_back(std::move(full));
    }
    out << "grid point";
    for (std::size_t i = 0; i < axes.size(); ++i) out << ' ' << axes[i] << '=' << prefix[i];
    out << ": " << t.rows.size() << " rows\n";

    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == values[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return all;
}

// ------------------------------------------------------------------ driver

RunSettings resolve_run(const Config& cfg, const std::optional<std::uint64_t>& seed, const std::optional<int>& workers,
                        const std::optional<std::string>& out) {
  RunSettings r;
  const long long s = cfg.get_int("run", "seed", 1);
  if (s < 0) throw ConfigError("[run] seed must be >= 0");
  r.seed = seed ? *seed : static_cast<std::uint64_t>(s);
  r.workers = workers ? *workers : static_cast<int>(cfg.get_int("run", "workers", 0));
  if (r.workers < 0) throw ConfigError("workers must be >= 0");
  if (out) {
    r.out_dir = *out;
  } else if (const char* env = std::getenv("HLTASEP_OUT_DIR"); env && *env) {
    r.out_dir = env;
  } else {
    r.out_dir = cfg.get_or("run", "out", ".");
  }
  if (r.workers > 0) omp_set_num_threads(r.workers);
  return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"half-line open TASEP workbench"};
  app.require_subcommand(1);
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> workers;
  std::optional<std::string> out_dir;
  std::vector<std::string> overrides;

  std::vector<CLI::App*> subs;
  for (const char* name : {"simulate", "exact", "verify", "sweep", "hecke-check"}) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "INI config file")->check(CLI::ExistingFile);
    sub->add_option("--seed", seed, "base seed");
    sub->add_option("--workers", workers, "worker threads (0 = all cores)");
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--set", overrides, "override section.key=value");
    subs.push_back(sub);
  }
  subs[0]->description("Monte Carlo ensemble; writes (replica, t, observable, value) rows");
  subs[1]->description("exact limit laws and stationary cylinder probabilities");
  subs[2]->description("run a verification suite: " + [] {
    std::string s;
    for (const auto& n : suite_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }());
  subs[3]->description("Cartesian parameter grid over simulate or exact");
  subs[4]->description("Hecke walk symmetry table");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kConfigError;
  }

  CLI::App* active = nullptr;
  for (auto* s : subs) {
    if (s->parsed()) active = s;
  }
  const std::string command = active->get_name();

  try {
    Config cfg = config_path.empty() ? Config{} : Config::load(config_path);
    for (const auto& o : overrides) cfg.set(o);
    const RunSettings run = resolve_run(cfg, seed, workers, out_dir);

    if (command == "simulate") {
      const auto t = simulate_table(cfg, run, out);
      const fs::path path = run.out_dir / cfg.get_or("simulate", "output", "simulate.csv");
      write_csv(path, t, metadata_block(command, cfg, run));
      out << "wrote " << t.rows.size() << " rows to " << path.string() << '\n';
      return kOk;
    }
    if (command == "exact") {
      const auto t = exact_table(cfg);
      print_table(out, t);
      const fs::path path = run.out_dir / cfg.get_or("exact", "output", "exact.csv");
      write_csv(path, t, metadata_block(command, cfg, run));
      auto json_path = path;
      json_path.replace_extension(".json");
      std::ofstream(json_path) << nlohmann::json{{"rows", table_json(t)}, {"config", cfg.entries()}}.dump(2) << '\n';
      return kOk;
    }
    if (command == "verify") {
      const std::string name = cfg.require("verify", "suite");
      std::vector<CriterionFn> fns;
      try {
        fns = suite(name);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
      return run_suite(fns, name, cfg, run, out, false);
    }
    if (command == "hecke-check") {
      return run_suite(suite("hecke"), "hecke", cfg, run, out, true);
    }
    const auto t = sweep_table(cfg, run, out);
    const fs::path path = run.out_dir / cfg.get_or("sweep", "output", "sweep.csv");
    write_csv(path, t, metadata_block(command, cfg, run));
    out << "wrote " << t.rows.size() << " rows to " << path.string() << '\n';
    return kOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "runtime error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

}  // namespace hltasep::cli
