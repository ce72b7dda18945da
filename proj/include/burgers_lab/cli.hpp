#ifndef BURGERS_LAB_CLI_HPP
#define BURGERS_LAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace burgers_lab {

// Exit codes: 0 pass, 1 verification failure, 2 config error, 3 numeric failure.
int run_cli(const std::vector<std::string>& args, std::ostream& os);

}  // namespace burgers_lab

#endif
