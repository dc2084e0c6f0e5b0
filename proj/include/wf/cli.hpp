#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wf::cli {

// Dispatches one invocation. Returns 0 on success, 1 on usage errors, 2 on
// domain errors (bad expressions, invalid specs, failed searches).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wf::cli
