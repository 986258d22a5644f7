#ifndef DEPDISJ_CLI_HPP
#define DEPDISJ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "depdisj/error.hpp"

namespace depdisj::cli {

enum ExitCode : int {
    kSuccess = 0,
    kSyntaxError = 1,
    kBadGroup = 2,
    kGroupTooLarge = 3,
    kVerificationFailed = 4,
    kIoError = 5,
};

int exit_code_for(ErrorKind kind) noexcept;

// modularize [INPUT] [-o OUTPUT] [--stats] [--verify] [--max-group-size K]
//
// args excludes the program name. INPUT "-" or absent reads `in`; without -o
// the rewritten document goes to `out`. Diagnostics, warnings and the
// --stats report go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace depdisj::cli

#endif // DEPDISJ_CLI_HPP
