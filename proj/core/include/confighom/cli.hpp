#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace confighom::cli {

// Command-line front end. args excludes the program name. Exit codes:
// 0 success, 1 verification failure, 2 argument or input errors, 3 rejected
// hypotheses (the violated hypothesis is printed to err).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace confighom::cli
