#ifndef EDK_CLI_HPP
#define EDK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace edk::cli {

enum ExitCode {
    kOk = 0,
    kParseError = 1,     // unreadable graph, certificate or command line
    kBudgetExceeded = 2, // bracket printed instead of an exact value
    kVerifyFailed = 3,
    kInvalidInput = 4,   // well-formed input the command cannot handle (e.g. disconnected)
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace edk::cli

#endif  // EDK_CLI_HPP
