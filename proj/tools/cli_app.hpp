#ifndef NEGWIT_TOOLS_CLI_APP_HPP
#define NEGWIT_TOOLS_CLI_APP_HPP

#include <string>
#include <vector>

namespace negwit::cli {

/// Runs the negwit command line. Exit codes: 0 success, 2 config error,
/// 3 numeric failure, 4 I/O error.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, const char* const* argv);

}  // namespace negwit::cli

#endif
