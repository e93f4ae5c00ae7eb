#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arqkit::cli {

/// Runs one command line (without the program name). Returns 0, 1 on domain error, 2 on usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// ARQKIT_FIXTURES if set, else the build-time corpus path.
std::string fixture_dir();

} // namespace arqkit::cli
