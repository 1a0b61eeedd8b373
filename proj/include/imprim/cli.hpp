#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace imprim {

enum ExitCode : int
{
    exit_ok = 0,
    exit_malformed = 2,
    exit_no_case = 3,
    exit_precondition = 4,
    exit_bound = 5
};

/// Runs one command line (without the program name). JSON goes to `out`
/// unless --out is given; diagnostics and --summary text go to `err`.
int run_command(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace imprim
