#pragma once

#include <iosfwd>

namespace qha::cli {

enum ExitCode { Pass = 0, Fail = 1, UsageError = 2 };

int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qha::cli
