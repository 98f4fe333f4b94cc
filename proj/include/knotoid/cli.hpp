#pragma once

// Command-line front end. Exit codes: 0 success, 1 negative verdict
// (NOT_MINIMAL, violations, invalid code under `validate`), 2 bad input or usage.

#include <iosfwd>
#include <string>
#include <vector>

namespace knotoid::cli {

/// Version string reported by --version and in JSON reports.
const char* version();

/// Runs one command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotoid::cli
