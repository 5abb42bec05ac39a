#ifndef HANPIECE_CLI_H_
#define HANPIECE_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace hanpiece {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Runs one subcommand. args excludes the program name. Streams stand in for
// stdin/stdout/stderr whenever no --input/--output file is given.
int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err);

}  // namespace hanpiece

#endif  // HANPIECE_CLI_H_
