#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcat_cli/io.hpp"

namespace fcat::cli {

enum ExitCode : int {
  kOk = 0,
  kValidationFailure = 1,
  kCounterexample = 2,
  kInternalInvariant = 3,
};

/// UnknownVerb, UnknownFixture and other usage problems.
class UsageError : public std::runtime_error {
 public:
  UsageError(std::string code, const std::string& detail)
      : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

struct Config {
  std::uint64_t seed = 1;
  std::size_t probe_cap = 256;
  bool pretty = false;
};

const std::vector<std::string>& verbs();

/// Parses `args` (without the program name), runs the verb and writes the
/// report to `out` and any error to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fcat::cli
