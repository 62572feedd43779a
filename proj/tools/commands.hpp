#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hltasep::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kConfigError = 2, kRuntimeError = 3 };

/// Entry point shared by the executable and the tests.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hltasep::cli
