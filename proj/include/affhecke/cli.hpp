#pragma once

#include <iosfwd>

namespace affhecke {

// Full command-line front end. Exit codes: 0 success / all checks pass,
// 1 verification failure, 2 usage error, 3 element-grammar parse error,
// 4 configuration error (unknown preset, bad config file, bad cache).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace affhecke
