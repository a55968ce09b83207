#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ktypes::cli {

/// Exit codes of run().
enum Exit : int {
  kSuccess = 0,
  kVerdictFail = 1,
  kUsageError = 2,
};

/// Runs one invocation; `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`. Theories and structures are resolved first
/// as file paths, then as bundled fixture names (with or without the .thy
/// or .str extension). The environment variable KTYPES_MAX_ELEMENTS caps
/// |A| + vars for every context built (default 6).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ktypes::cli
