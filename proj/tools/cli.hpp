#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpvdw::cli {

//! Exit codes: 0 success, 1 check failure, 2 usage or configuration error,
//! 3 numerical failure.
enum ExitCode : int { ok = 0, check_failed = 1, usage = 2, numerical = 3 };

//! Runs one command line (without the program name).
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace cpvdw::cli
