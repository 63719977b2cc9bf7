#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bbcage::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,         // bad arguments, unreadable or malformed input
  kVerifyFailed = 2,  // the graph does not have the requested property
  kIntegrity = 3,     // a construction contradicted its own certificate
};

/// Runs one command line (args excludes the program name). Graphs go to
/// out unless --output is given; certificates and diagnostics go to err
/// unless --cert is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace bbcage::cli
