#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace terra3d::cli {

// Exit codes returned by run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUsageError = 2;

/**
 * Runs one terra3d command. `args` excludes the program name, e.g.
 * {"terrain", "slope", "--dem", "in.asc", "--out", "out.asc"}.
 *
 * Data goes to files or `out`; diagnostics go to `err`. Output files are
 * only written once the whole command has succeeded.
 */
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace terra3d::cli
