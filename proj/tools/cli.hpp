#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vknot::cli {

/// Runs the command-line front end. Returns 0 on success, 1 on domain
/// errors (invalid codes, quandles, or files), 2 on usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace vknot::cli
