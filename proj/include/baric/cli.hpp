#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace baric {

// Runs one command; args exclude the program name. Exit codes: 0 when every
// verdict was computed, 1 on input errors, 2 on internal invariant failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace baric
