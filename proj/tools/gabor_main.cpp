#include <string>
#include <vector>

#include "gabor/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gabor::cli::run(args);
}
