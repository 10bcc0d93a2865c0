#pragma once

namespace vbcli {

// Full CLI entry point. Exit codes: 0 success, 1 usage error, 2
// validation/domain error, 3 solver non-convergence.
int run_command(int argc, const char* const* argv);

}  // namespace vbcli
