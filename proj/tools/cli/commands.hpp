#pragma once

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace selsieve::cli {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvariant = 1,
  kExitUsage = 2,
  kExitCapacity = 3,
};

inline constexpr const char* kMemCapEnv = "SELECTOR_SIEVE_MEM_CAP";

// "lo:hi" with lo <= hi.
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text);

// Runs one command line (argv without the program name). Table output goes
// to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Maps an exception escaping a command onto the exit-code contract and
// prints the diagnostic.
int report_error(std::exception_ptr error, std::ostream& err);

}  // namespace selsieve::cli
