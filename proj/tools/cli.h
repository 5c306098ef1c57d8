#ifndef FULLCOVER_TOOLS_CLI_H_
#define FULLCOVER_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fullcover::cli {

enum ExitCode : int {
  kOk = 0,
  kExpectationFailed = 1,
  kUsage = 2,
};

struct RunConfig {
  int n = 0;
  int k = 0;
  std::optional<int> ell;
  std::vector<int> kernel;
  std::uint64_t rng_seed = 1;
  std::size_t trials = 500;
  std::size_t size_bound = 512;
  bool json = false;
};

// Parses argv (argv[0] is the program name), runs the subcommand, and
// returns the process exit code.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fullcover::cli

#endif  // FULLCOVER_TOOLS_CLI_H_
