#include <iostream>
#include <string>
#include <vector>

#include "terra3d/cli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return terra3d::cli::run(args, std::cout, std::cerr);
}
