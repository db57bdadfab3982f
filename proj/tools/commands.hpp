#pragma once
// Subcommands of the qalg tool. Exit codes: 0 all checks pass, 1 some check
// failed, 2 usage or parse error.

#include <iosfwd>
#include <string>
#include <vector>

namespace qalg::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qalg::cli
