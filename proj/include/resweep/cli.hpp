#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "resweep/exact.hpp"

namespace resweep::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

struct RunConfig {
    std::string subcommand;       // detect, score, verify, gen, oracle, mincut
    std::string generator;        // gen only: daisy, tree, tree-partition
    std::string input = "-";      // graph edge list, "-" for stdin
    std::string partition_path;   // score / verify
    int r = 1;
    int height = 0;
    ExactRatio t_min = ExactRatio::from_int(1);
    ExactRatio t = ExactRatio::from_int(1);
    std::string output;  // empty: stdout
    std::string trace;
    bool ensure_connected = false;
    bool exact_report = false;
};

/// Runs one subcommand. Diagnostics go to `err`.
int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace resweep::cli
