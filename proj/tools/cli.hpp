#pragma once

#include "covgeo/inequalities.hpp"

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace covgeo::cli {

struct Hooks {
  /// Appended to the fuzz checks; lets tests inject verdicts.
  std::function<std::vector<InequalityVerdict>(const FuzzInstance&)> extra_fuzz_checks;
};

/// Runs one command line (without the program name). Returns the process exit code:
/// 0 success, 1 usage or input error, 2 inequality violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Hooks& hooks = {});

}  // namespace covgeo::cli
