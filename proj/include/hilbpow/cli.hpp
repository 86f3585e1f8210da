#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hilbpow::cli {

// Exit 0 on success, 1 on domain errors (with a machine-readable error
// object on the error stream), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

} // namespace hilbpow::cli
