#pragma once

// Subcommands of the sp16 tool. Each writes to the given streams and
// returns the process exit code.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "sp16/bound_pipeline.hpp"

namespace sp16 {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,            // unexpected failure
  kExitUsage = 2,            // bad command line
  kExitValidation = 3,       // input file or config rejected
  kExitDegenerateR = 4,      // |R| < 2, no S_x can be built
  kExitPropertyFailure = 5,  // a verify suite reported a failing law
};

enum class Suite { algebra, setops, pipeline, all };

int cmd_verify(Suite suite, std::uint64_t trials, std::uint64_t seed, std::ostream& out, std::ostream& err);

struct EvalArgs {
  std::filesystem::path input;
  Mode mode = Mode::sixteen_on;
  std::optional<Side> side;
  bool allow_uncertified = false;
  bool strict_counts = false;  // also print the report with the strict count basis
};

int cmd_eval(const EvalArgs& args, std::ostream& out, std::ostream& err);

struct SearchArgs {
  std::filesystem::path config;
  std::optional<std::uint64_t> seed;               // overrides the config's seed
  std::optional<std::filesystem::path> out;        // default: <config stem>.best.set beside the config
  std::optional<std::filesystem::path> history;    // plain-text history table
};

int cmd_search(const SearchArgs& args, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sp16
