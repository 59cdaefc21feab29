#ifndef LPA_CLI_HPP
#define LPA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lpa::cli {

/// Exit statuses of run().
inline constexpr int kOk = 0;
inline constexpr int kModuleError = 1;
inline constexpr int kBadInput = 2;

/// args excludes the program name. Results go to `out` (or to --out when
/// given), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lpa::cli

#endif  // LPA_CLI_HPP
