#pragma once

#include <iosfwd>

namespace econokit::cli {

/// Executes one CLI invocation. Reports go to `out`; one-line diagnostics go
/// to `err`. Returns 0 on success, 2 on usage errors, 1 on data or numeric
/// errors. Output files are only written after the computation succeeds.
int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace econokit::cli
