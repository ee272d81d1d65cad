#ifndef POSETOP_CLI_HPP_
#define POSETOP_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace posetop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // domain error or failed verification
inline constexpr int kExitUsage = 2;

// args excludes the program name. Posets are given as a JSON file path or
// inline as "{a<b, c}".
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace posetop::cli

#endif  // POSETOP_CLI_HPP_
