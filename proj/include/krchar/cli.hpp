#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace krc {

// Full command-line surface; returns the process exit code.
// 0: success / all verifications passed; 1: a verification failed;
// 2: usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace krc
