#pragma once

// The ncrs command line.  Exit codes: 0 success, 1 usage or parse error,
// 2 mathematical precondition violated.

#include <iosfwd>
#include <string>
#include <vector>

namespace ncrs {

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace ncrs
