#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mrspec::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kComputationError = 2,
  kStrictFailure = 3,
};

/// Runs the command line `args` (without the program name). Data goes to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed-point rendering with '.' as decimal separator regardless of locale.
std::string format_fixed(double value, int precision);

/// One RFC-4180 record terminated by LF; `sep` is ',' or '\t'.
std::string format_record(const std::vector<std::string>& fields, char sep);

} // namespace mrspec::cli
