#pragma once

#include <iosfwd>

namespace perfcode {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kBudgetExhausted = 2, kMalformedInput = 3 };

/// Entry point of the perfcode tool; writes results to `out` and diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace perfcode
