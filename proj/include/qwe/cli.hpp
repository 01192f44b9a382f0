#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qwe::cli {

// Runs one command line (without the program name). Exit status: 0 on
// success or pass, 1 on a check failure, 2 on an input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwe::cli
