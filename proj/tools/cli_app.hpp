#pragma once

#include <ostream>

namespace proglab::cli {

// Dispatches one subcommand invocation. Records go to `out`, diagnostics to
// `err`. Returns 0 on success, 2 on usage errors, 3 on refused computations
// (unsupported level, range overflow, eps below the certifiable floor).
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace proglab::cli
