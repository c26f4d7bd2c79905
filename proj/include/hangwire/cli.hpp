#pragma once

// Command-line surface. Exit status: 0 on success, 1 on verification
// failure or counterexample, 2 on usage errors.

#include <iosfwd>
#include <string>
#include <vector>

namespace hangwire {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hangwire
