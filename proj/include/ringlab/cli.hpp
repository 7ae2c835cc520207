#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ringlab {

// Runs one CLI invocation. Exit codes: 0 success, 1 refuted verdict / fixture
// mismatch / search hit under --fail-on-hit, 2 usage error, 3 parse or
// elaboration error.
int cli_execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringlab
