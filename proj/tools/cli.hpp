#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace levywn::cli {

// Seed used when --seed is not given.
inline constexpr std::uint64_t kDefaultSeed = 20240917;

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInvalidConfig = 2 };

// Runs one command line; `args` excludes the program name. Results go to the
// --out file or to `out`; failures are one JSON line on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace levywn::cli
