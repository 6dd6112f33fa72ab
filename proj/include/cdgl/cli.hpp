#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cdgl::cli {

int run(int argc, char** argv);

/// Runs one invocation with explicit streams (argv[0] excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cdgl::cli
