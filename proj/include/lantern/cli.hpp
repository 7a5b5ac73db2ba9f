#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lantern {

// Runs one CLI invocation. Exit code 0 on success, 1 on a negative verdict
// (unequal words, failed certificate, obstruction), 2 on usage/input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lantern
