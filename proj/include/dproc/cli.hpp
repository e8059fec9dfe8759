#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dproc {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_analysis = 2 };

/// Entry point of the `dproc` tool. `args` excludes the program name.
///
///   dproc enumerate FILE.dproc [--format table|csv|jsonl] [--count-only]
///                              [--oracle] [--max-bruteforce N] [--threads N]
///   dproc analyze FILE.dproc... --stakeholders FILE.dstake...
///                              [--format ...] [--cohorts] [--threads N]
///   dproc export-dot FILE.dproc
///   dproc verify [--seed N] [--cases N] [--slow]
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace dproc
