#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "hott/env.hpp"

namespace hott {

struct DriverOptions {
  std::string stdlibDir;   // import search root; empty = none
  bool dumpElaborated = false;
  bool summary = false;
  int jobs = 1;            // accepted for CLI compatibility; results identical
};

// Checks the given files (and their imports) in dependency order.
// Diagnostics are written to `out` as `path:line:col: error: <message>`,
// sorted by file then position. Returns 0 on success, 1 on syntax/type
// errors, 2 on I/O errors or import cycles. If `envOut` is non-null, the
// final global environment is copied there.
int runCheck(const std::vector<std::string>& paths, const DriverOptions& opts,
             std::ostream& out, GlobalEnv* envOut = nullptr);

}  // namespace hott
