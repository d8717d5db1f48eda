#ifndef WHITLAT_CLI_HPP
#define WHITLAT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace whitlat {

/// Run the command line front end on argv-style arguments (without the
/// program name).  Exit codes: 0 success, 1 bad input, 2 a verify subcommand
/// found a counterexample.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace whitlat

#endif
