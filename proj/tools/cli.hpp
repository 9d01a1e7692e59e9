#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace netop::cli {

// args excludes the program name. Output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace netop::cli
