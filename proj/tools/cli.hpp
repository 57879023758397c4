#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partize::cli {

// Exit codes: 0 yes/valid, 1 no/invalid, 2 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace partize::cli
