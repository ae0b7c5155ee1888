// commands.hpp -- the CLI entry point, callable in-process for tests.
// Exit codes: 0 computed/verified, 1 identity violated, 2 bad input.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace symch {

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace symch
