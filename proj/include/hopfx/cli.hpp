#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace hopfx {

// The whole command-line surface, runnable in-process: args exclude the
// program name ({"exp", "s3", "--method", "all"}).  Human output goes to
// out, diagnostics to err.  Returns the process exit code: 0 success,
// 1 contract or verification failure, 2 usage error.  Output is a pure
// function of (args, input documents) — no timings, no environment.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfx
