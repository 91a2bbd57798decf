#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacring::cli {

inline constexpr const char* kVersion = "1.0.0";

/// Runs one command. `args` excludes the program name. Writes the report to
/// `out` and log lines to `err`. Returns 0 on success, 1 when the mathematics
/// refuses the input (singular hypersurface, non-Artinian quotient, ...), 2 on
/// malformed input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jacring::cli
