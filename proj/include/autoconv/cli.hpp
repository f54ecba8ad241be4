#pragma once

namespace autoconv::cli {

/// Entry point behind the binary: parses flags, dispatches, writes the
/// report.  Returns the process exit status (0 success, 1 failed check,
/// 2 invalid input).
int run(int argc, char** argv);

}  // namespace autoconv::cli
