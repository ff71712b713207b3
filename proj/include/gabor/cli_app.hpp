#pragma once

#include <string>
#include <vector>

namespace gabor::cli {

// Runs one command; argv excludes the program name. Returns the process
// exit status: 0 on success, nonzero on any error. Diagnostics go to
// stderr, data to the requested output files.
int run(const std::vector<std::string>& argv);

}  // namespace gabor::cli
