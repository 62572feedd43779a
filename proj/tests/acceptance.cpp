#include <algorithm>
#include <iostream>

#include "CLI11.hpp"

#include "hltasep/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria 1-10"};
  hltasep::SuiteOptions o;
  std::vector<int> only;
  bool verbose = false;
  app.add_option("--seed", o.seed);
  app.add_option("--workers", o.workers);
  app.add_option("--criteria", only, "subset of criterion ids");
  app.add_flag("-v,--verbose", verbose);
  CLI11_PARSE(app, argc, argv);

  const auto criteria = hltasep::acceptance_criteria();
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto r = criteria[i](o);
    all = all && r.pass;
    std::cout << r.summary() << std::endl;
    for (const auto& c : r.checks) {
      if (verbose || !c.pass) std::cout << "    " << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
  }
  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
  return all ? 0 : 1;
}
