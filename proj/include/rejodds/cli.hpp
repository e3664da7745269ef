#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rejodds::cli {

// Entry point shared by the binary and the tests. args excludes the program
// name. Machine output goes to out, diagnostics to err. Returns 0 on success,
// 1 on validation/usage errors, 2 on computation errors.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace rejodds::cli
