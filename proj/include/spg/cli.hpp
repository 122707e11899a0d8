#ifndef SPG_CLI_HPP
#define SPG_CLI_HPP

#include <iosfwd>

namespace spg {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitOverflow = 3;
inline constexpr int kExitDivergence = 4;

// Entry point of the spgq tool: subcommands query, batch and gen-queries.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spg

#endif  // SPG_CLI_HPP
