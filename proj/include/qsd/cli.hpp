#pragma once

namespace qsd {

/// Entry point behind the `qsdkit` binary. Exit codes: 0 success, 1 domain
/// errors (degenerate scenarios, ball violations, mismatched averages, ...),
/// 2 usage errors (bad flags, unreadable or malformed input files).
int run_cli(int argc, char** argv);

}  // namespace qsd
