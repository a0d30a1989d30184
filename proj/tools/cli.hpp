#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "smc/model.hpp"

namespace smc::cli {

enum ExitCode : int { ok = 0, violation = 1, parse_error = 2, resource_cap = 3 };

/// Run-wide settings shared by every command. Flags override SMC_* variables.
struct Manifest {
  std::uint32_t p = 101;
  int truncation = 2;
  Window window;              ///< chain degrees and simplex parameters for generators
  std::size_t cap = 4096;     ///< max entries per block
  std::uint64_t seed = 1;
  std::size_t samples = 20;
  bool normalized = false;
  bool json = false;
  bool pretty = false;
  std::vector<std::string> inputs;  ///< file paths, or @fixture names
  std::string output;               ///< where to write the produced object, if any
};

/// Parses "lo..hi".
std::pair<int, int> parse_range(const std::string& s);

/// Full command-line entry point; the report goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smc::cli
