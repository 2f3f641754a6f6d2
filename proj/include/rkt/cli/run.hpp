#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rkt::cli {

// Exit codes: 0 success, 2 input error, 3 outside the supported hypothesis,
// 4 failed cross-check or verification.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace rkt::cli
