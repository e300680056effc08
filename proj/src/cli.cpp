#include "updag/cli.hpp"
namespace updag { int cli_main(int, char**) { return 0; } int cli_run(const std::vector<std::string>&, std::string&, std::string&) { return 0; } }
