#pragma once

#include <string>
#include <vector>

namespace gqchar::cli {

// Exit codes: 0 success, 1 verify mismatch, 2 invalid input, 3 cap exceeded.
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

} // namespace gqchar::cli
