#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blockatlas {

/// Runs one CLI invocation. args excludes the program name. Results go to
/// out as a single JSON line (indented under --pretty); diagnostics go to
/// err. Returns the process exit code: 0 on success, 1 on parse or usage
/// errors, 2 on domain errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blockatlas
