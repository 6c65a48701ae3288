#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace riesz::cli {

/// Entry point of riesz-lab. `args[0]` is the program name. Returns 0 on
/// success, 1 on usage or argument-domain errors, 2 on numeric failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riesz::cli
