#pragma once

#include <ostream>

namespace padwav::cli {

/// Entry point of the `padwav` tool. Output goes to `out` (or to --out), and
/// diagnostics go to `err`. Exit codes: 0 success, 1 a verify suite failed,
/// 2 bad arguments or input. Nothing is written to the output on exit 2.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace padwav::cli
