#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clasp::cli {

/// Exit codes: 0 success, 1 domain failure (validation, certificate,
/// verdict), 2 input error (unreadable file, malformed JSON, bad flags).
enum Exit : int { kOk = 0, kDomainFailure = 1, kInputError = 2 };

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace clasp::cli
