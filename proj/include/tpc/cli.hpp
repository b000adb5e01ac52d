#ifndef TPC_CLI_HPP
#define TPC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tpc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;     // bad flags or config schema violation
inline constexpr int kExitResource = 3;  // size cap exceeded

// Entry point behind the `tpc` executable. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tpc::cli

#endif // TPC_CLI_HPP
