#pragma once

#include <iosfwd>

namespace zdg::cli {

/// Entry point of the `zdg` tool. Returns the process exit status:
/// 0 success, 1 check failure, 2 usage error, 3 resource cap.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zdg::cli
