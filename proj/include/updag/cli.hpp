#pragma once

#include <string>
#include <vector>

namespace updag {

/// Exit codes: 0 success, 1 well-formed negative decision, 2 input/usage
/// error, 3 internal verification failure.
int cli_run(const std::vector<std::string>& argv, std::string& out, std::string& err);

int cli_main(int argc, char** argv);

}  // namespace updag
