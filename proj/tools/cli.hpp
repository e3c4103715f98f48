#pragma once

#include <ostream>

namespace deaic_cli {

/// Runs one command. Machine output goes to `--out` or to `out`; prompts,
/// summaries and errors go to `err`. Returns the process exit code:
/// 0 success, 1 solver-level failure, 2 usage or input error.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace deaic_cli
