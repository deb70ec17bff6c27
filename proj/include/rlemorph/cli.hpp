#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rlemorph::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kIoError = 2,
    kDomainError = 3,
};

/// Entry point of the `rlemorph` tool. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rlemorph::cli
