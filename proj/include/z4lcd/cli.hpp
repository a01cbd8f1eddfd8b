#ifndef Z4LCD_CLI_HPP
#define Z4LCD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace z4lcd::cli {

enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kUsageError = 2,    // bad arguments, even N, non-divisor polynomials, ...
    kVerifyMismatch = 3,
};

/**
 * Runs one command line (args excludes the program name) and returns the
 * process exit code. Results go to out, diagnostics to err.
 *
 *   factor N | classify N | hull N --f P --g P | enumerate-lcd N | count-lcd N
 *   verify N [--max-bruteforce M]
 *
 * with global --json and --config FILE. P is a coefficient list such as
 * "3,1,2,1" or an id list "ids:0,2".
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace z4lcd::cli

#endif  // Z4LCD_CLI_HPP
