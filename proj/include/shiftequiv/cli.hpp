#ifndef SHIFTEQUIV_CLI_HPP_
#define SHIFTEQUIV_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace shiftequiv::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,     // verification failed, not applicable, none found
  kUsage = 2,        // usage, parse, shape and overflow errors
  kResourceCap = 3,  // find-esse gave up
};

// Runs one command; `args` excludes the program name. Reports go to `out`
// (or the file named by -o), diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

}  // namespace shiftequiv::cli

#endif  // SHIFTEQUIV_CLI_HPP_
