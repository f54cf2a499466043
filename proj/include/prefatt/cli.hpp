#pragma once

namespace prefatt {

// Full command-line entry point. Exit codes: 0 success / all checks pass,
// 1 verification failure, 2 usage or validation error.
int run_cli(int argc, char** argv);

}  // namespace prefatt
