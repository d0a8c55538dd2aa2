#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "numrad/fuzz.hpp"

namespace numrad::cli {

enum ExitCode : int { kSuccess = 0, kViolation = 1, kInputError = 2, kNumericalFailure = 3 };

/// Runs one `numrad` invocation; args excludes the program name.
/// `extra` is appended to the fuzz property suite (tests use it to inject failures).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::vector<ExtraProperty>& extra = {});

}  // namespace numrad::cli
