#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hstar::cli {

/// Run the command line given argv-style arguments (without the program
/// name). Reports go to `out` as deterministic JSON documents; failures
/// produce a single-line machine-parsable error record on `err` and a
/// nonzero exit status.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

} // namespace hstar::cli
