#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abslice::cli {

/// Exit codes: 0 success (or obstructed verdict), 1 parse/validation error,
/// 2 inconclusive verdict.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

/// Runs one command. `args` excludes the program name. Both "model eval" and
/// "model-eval" spellings are accepted.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace abslice::cli
